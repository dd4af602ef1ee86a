# Author: Victor
# Page name: errors.py
# Page purpose: Exception types shared by the numeric modules and the CLI
# Date of creation: 2026-10-16
# Every error derives from ValueError.


class HeegnerError(ValueError):
    """Base class for every error raised by this package."""


class PrecisionError(HeegnerError):
    pass


class ParameterError(HeegnerError):
    pass


class RegimeError(HeegnerError):
    """Argument outside every evaluation regime of a series."""


class PoleError(HeegnerError):
    pass


class DomainError(HeegnerError):
    """Point is not inside the region a representation is valid on."""


class DerivativeSingularityError(HeegnerError):
    pass


class ConsistencyError(HeegnerError):
    """Two independent evaluations of the same quantity disagree."""


class DivergenceError(HeegnerError):
    pass


class UnknownIdentityError(HeegnerError):
    def __init__(self, identity_id, valid_ids):
        self.identity_id = identity_id
        self.valid_ids = list(valid_ids)
        super().__init__(f"Unknown identity id: {identity_id}")
