# Author: Victor
# Page name: catalog.py
# Page purpose: Every identity, table value and closed-form constant the verifiers check, as exact data
# Date of creation: 2026-10-16
# Records hold literals exactly as they are printed. Where a printed literal is wrong the record
# keeps both the printed and the corrected value and says so in its notes.
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from errors import ParameterError, UnknownIdentityError
from fastseries import SeriesTermSpec
from hypergeom import HypParams, ONE_PARAMS, ZERO_PARAMS
from modular import HeegnerPoint, legendre_symbol

logger = logging.getLogger(__name__)

SQRT_POINTS = (1, 2, 3, 4, 7)
HALF_INTEGER_POINTS = (3, 7, 11, 19, 27, 43, 67, 163)
CLASS_NUMBER_ONE_PRIMES = (3, 7, 11, 19, 43, 67, 163)

# J at sqrt(-N) and at (-1 + sqrt(-N))/2
SQRT_J: Dict[int, Fraction] = {
    1: Fraction(1),
    2: Fraction(5 ** 3, 3 ** 3),
    3: Fraction(5 ** 3, 2 ** 2),
    4: Fraction(11 ** 3, 2 ** 3),
    7: Fraction(5 ** 3 * 17 ** 3, 2 ** 6),
}
HALF_INTEGER_J: Dict[int, Fraction] = {
    3: Fraction(0),
    7: Fraction(-5 ** 3, 4 ** 3),
    11: Fraction(-8 ** 3, 3 ** 3),
    19: Fraction(-8 ** 3),
    27: Fraction(-40 ** 3, 3 ** 2),
    43: Fraction(-80 ** 3),
    67: Fraction(-440 ** 3),
    163: Fraction(-53360 ** 3),
}
SQRT_S2: Dict[int, Fraction] = {
    2: Fraction(5, 14),
    3: Fraction(5, 11),
    4: Fraction(11, 21),
    7: Fraction(85, 133),
}
HALF_INTEGER_S2: Dict[int, Fraction] = {
    7: Fraction(5, 21),
    11: Fraction(32, 77),
    19: Fraction(32, 57),
    27: Fraction(160, 253),
    43: Fraction(640, 903),
    67: Fraction(33440, 43617),
    163: Fraction(77265280, 90856689),
}


class IdentityKind(str, Enum):
    SERIES_INFTY = "series_infty"
    HYP_ONE = "hyp_one"
    HYP_ZERO = "hyp_zero"
    TABLE_VALUE = "table_value"
    ETA_SPECIAL = "eta_special"
    CHOWLA_SELBERG = "chowla_selberg"


def _fractions(pairs) -> Tuple[Tuple[Fraction, Fraction], ...]:
    return tuple((Fraction(base), Fraction(exponent)) for base, exponent in pairs)


@dataclass(frozen=True)
class QuadraticFactor:
    """rational + coefficient * sqrt(radicand)."""

    rational: Fraction
    coefficient: Fraction
    radicand: int

    def __post_init__(self):
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.radicand <= 0:
            raise ParameterError(f"radicand must be positive, got {self.radicand}")

    def __str__(self):
        return f"({self.rational} + {self.coefficient}*sqrt({self.radicand}))"


@dataclass(frozen=True)
class ClosedFormConstant:
    """rational * prod(quadratic) * prod(base^e) * pi^k * prod(Gamma(x)^m) * exp(i pi phase)."""

    rational: Fraction
    surds: Tuple[Tuple[Fraction, Fraction], ...] = ()
    quadratic: Tuple[QuadraticFactor, ...] = ()
    pi_exponent: Fraction = Fraction(0)
    gammas: Tuple[Tuple[Fraction, Fraction], ...] = ()
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "surds", _fractions(self.surds))
        object.__setattr__(self, "gammas", _fractions(self.gammas))
        object.__setattr__(self, "pi_exponent", Fraction(self.pi_exponent))
        object.__setattr__(self, "phase", Fraction(self.phase))
        for base, _ in self.surds:
            if base <= 0:
                raise ParameterError(f"surd bases must be positive rationals, got {base}")
        for argument, _ in self.gammas:
            if argument <= 0:
                raise ParameterError(f"Gamma arguments must be positive rationals, got {argument}")

    def __str__(self):
        parts = [str(self.rational)]
        parts += [str(factor) for factor in self.quadratic]
        parts += [f"{base}^({exponent})" for base, exponent in self.surds]
        if self.pi_exponent:
            parts.append(f"pi^({self.pi_exponent})")
        parts += [f"Gamma({argument})^({exponent})" for argument, exponent in self.gammas]
        if self.phase:
            parts.append(f"exp(i*pi*{self.phase})")
        return " * ".join(parts)


@dataclass(frozen=True)
class SeriesDescriptor:
    """sum (offset + n) (6n)!/((3n)! n!^3) (sign/base)^n; printed_base is set when the printed base is wrong."""

    offset: Fraction
    base: Fraction
    sign: int
    printed_base: Optional[Fraction] = None

    def spec(self, printed: bool = False) -> SeriesTermSpec:
        base = self.printed_base if printed and self.printed_base is not None else self.base
        return SeriesTermSpec(offset=self.offset, base=base, sign=self.sign)

    @property
    def j(self) -> Fraction:
        return self.sign * self.base


@dataclass(frozen=True)
class HypDescriptor:
    """square_coefficient F(x)^2 + product_coefficient F(x) F(a+1, b+1; c+1; x)."""

    params: HypParams
    square_coefficient: Fraction
    product_coefficient: Fraction
    argument: Fraction
    printed_product_argument: Optional[Fraction] = None


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    kind: IdentityKind
    heegner: Optional[HeegnerPoint] = None
    lhs: Optional[ClosedFormConstant] = None
    series: Optional[SeriesDescriptor] = None
    hyp: Optional[HypDescriptor] = None
    # "J" or "s2" for table values, "eta" or "eta^2" for eta specials
    quantity: Optional[str] = None
    value: Optional[Fraction] = None
    prime: Optional[int] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def group(self) -> str:
        return self.id.split(".")[0]

    @property
    def has_typo(self) -> bool:
        return (self.series is not None and self.series.printed_base is not None) or (
            self.hyp is not None and self.hyp.printed_product_argument is not None
        )


def _sqrt(n) -> Tuple[Fraction, Fraction]:
    return Fraction(n), Fraction(1, 2)


def _table_records() -> List[IdentityRecord]:
    records = []
    for n in SQRT_POINTS:
        point = HeegnerPoint.sqrt_minus(n)
        records.append(IdentityRecord(id=f"table.J.{point.label}", kind=IdentityKind.TABLE_VALUE,
                                      heegner=point, quantity="J", value=SQRT_J[n]))
    for n in HALF_INTEGER_POINTS:
        point = HeegnerPoint.half_integer(n)
        records.append(IdentityRecord(id=f"table.J.{point.label}", kind=IdentityKind.TABLE_VALUE,
                                      heegner=point, quantity="J", value=HALF_INTEGER_J[n]))
    for n, value in SQRT_S2.items():
        point = HeegnerPoint.sqrt_minus(n)
        records.append(IdentityRecord(id=f"table.s2.{point.label}", kind=IdentityKind.TABLE_VALUE,
                                      heegner=point, quantity="s2", value=value))
    for n, value in HALF_INTEGER_S2.items():
        point = HeegnerPoint.half_integer(n)
        records.append(IdentityRecord(id=f"table.s2.{point.label}", kind=IdentityKind.TABLE_VALUE,
                                      heegner=point, quantity="s2", value=value))
    return records


# (point, lhs rational, lhs radicand, offset A, base C, sign)
_SERIES_ROWS = (
    (HeegnerPoint.sqrt_minus(2), Fraction(5, 28), 5, Fraction(3, 28), 20 ** 3, 1),
    (HeegnerPoint.sqrt_minus(3), Fraction(5, 66), 15, Fraction(1, 11), 2 * 30 ** 3, 1),
    (HeegnerPoint.sqrt_minus(4), Fraction(11, 252), 33, Fraction(5, 63), 66 ** 3, 1),
    (HeegnerPoint.sqrt_minus(7), Fraction(85, 7182), 255, Fraction(8, 133), 255 ** 3, 1),
    (HeegnerPoint.half_integer(7), Fraction(5, 63), 15, Fraction(8, 63), 15 ** 3, -1),
    (HeegnerPoint.half_integer(11), Fraction(16, 77), 2, Fraction(15, 154), 32 ** 3, -1),
    (HeegnerPoint.half_integer(19), Fraction(16, 171), 6, Fraction(25, 342), 96 ** 3, -1),
    (HeegnerPoint.half_integer(27), Fraction(80, 2277), 30, Fraction(31, 506), 3 * 160 ** 3, -1),
    (HeegnerPoint.half_integer(43), Fraction(320, 8127), 15, Fraction(263, 5418), 960 ** 3, -1),
    (HeegnerPoint.half_integer(67), Fraction(880, 130851), 330, Fraction(10177, 261702), 5280 ** 3, -1),
    (HeegnerPoint.half_integer(163), Fraction(213440, 272570067), 10005,
     Fraction(13591409, 545140134), 640320 ** 3, -1),
)

SQRT7_PRINTED_BASE = Fraction(225 ** 3)


def _series_records() -> List[IdentityRecord]:
    records = []
    for point, rational, radicand, offset, base, sign in _SERIES_ROWS:
        printed_base = None
        notes: Tuple[str, ...] = ()
        if point == HeegnerPoint.sqrt_minus(7):
            printed_base = SQRT7_PRINTED_BASE
            notes = ("printed base 225^3 is a typo for j(sqrt(-7)) = 255^3; verified with 255^3",)
        records.append(IdentityRecord(
            id=f"series.{point.label}",
            kind=IdentityKind.SERIES_INFTY,
            heegner=point,
            lhs=ClosedFormConstant(rational=rational, surds=(_sqrt(radicand),), pi_exponent=-1),
            series=SeriesDescriptor(offset=offset, base=Fraction(base), sign=sign, printed_base=printed_base),
            notes=notes,
        ))
    return records


_GAMMA_QUARTER = ((Fraction(1, 4), Fraction(-4)),)


def _one_records() -> List[IdentityRecord]:
    def quadratic(n):
        return (QuadraticFactor(1, 1, n), QuadraticFactor(-n, 1, n))

    rows = (
        (2, ClosedFormConstant(Fraction(5, 84), surds=(_sqrt(2), _sqrt(3), _sqrt(5)), quadratic=quadratic(2),
                               pi_exponent=2, gammas=_GAMMA_QUARTER),
         Fraction(3, 28), Fraction(-3, 100), Fraction(98, 125)),
        (3, ClosedFormConstant(Fraction(5, 99), surds=(_sqrt(3), _sqrt(5)), quadratic=quadratic(3),
                               pi_exponent=2, gammas=_GAMMA_QUARTER),
         Fraction(1, 11), Fraction(-1, 225), Fraction(121, 125)),
        (4, ClosedFormConstant(Fraction(-11, 42), surds=(_sqrt(11),), pi_exponent=2, gammas=_GAMMA_QUARTER),
         Fraction(5, 63), Fraction(-10, 3 ** 2 * 11 ** 3), Fraction(3 ** 3 * 7 ** 2, 11 ** 3)),
        (7, ClosedFormConstant(Fraction(85, 3 ** 3 * 7 ** 2 * 19), surds=(_sqrt(7), _sqrt(85)), quadratic=quadratic(7),
                               pi_exponent=2, gammas=_GAMMA_QUARTER),
         Fraction(8, 133), Fraction(-16, 3 ** 2 * 5 ** 2 * 17 ** 3), Fraction(3 ** 5 * 7 * 19 ** 2, 5 ** 3 * 17 ** 3)),
    )
    records = []
    for n, lhs, square, product, argument in rows:
        point = HeegnerPoint.sqrt_minus(n)
        notes: Tuple[str, ...] = ()
        if n == 4:
            notes = ("printed left-hand side carries a leading minus sign",)
        records.append(IdentityRecord(
            id=f"one.{point.label}",
            kind=IdentityKind.HYP_ONE,
            heegner=point,
            lhs=lhs,
            hyp=HypDescriptor(ONE_PARAMS, square, product, argument),
            notes=notes,
        ))
    return records


_GAMMA_THIRD = ((Fraction(1, 3), Fraction(-6)),)

# (N, lhs rational, 1/6-power radicand, 1/3-power radicand, F^2 coefficient, F F' coefficient, J/(J-1))
_ZERO_ROWS = (
    (7, Fraction(40, 189), 7, None, Fraction(-40, 567), Fraction(500, 15309), Fraction(125, 189)),
    (11, Fraction(128, 693), 11, 7, Fraction(-48, 539), Fraction(288, 41503), Fraction(512, 539)),
    (19, Fraction(256, 513), 19, None, Fraction(-112, 1539), Fraction(224, 789507), Fraction(512, 513)),
    (27, Fraction(640, 6831), 27, 253, Fraction(-3920, 64009), Fraction(84000, 4097152081),
     Fraction(64000, 64009)),
    (43, Fraction(6400, 24381), 43, 21, Fraction(-74560, 1536003), Fraction(32000, 112347867429),
     Fraction(512000, 512001)),
    (67, Fraction(56320, 392553), 67, 217, Fraction(-9937840, 255552003), Fraction(5324000, 3109848868443429),
     Fraction(85184000, 85184001)),
    (163, Fraction(17075200, 817710201), 163, 185801, Fraction(-11363838226240, 455794119168003),
     Fraction(9495710816000, 9892775193720748560806619429), Fraction(151931373056000, 151931373056001)),
)

H43_PRINTED_ARGUMENT = Fraction(512000, 512000)


def _zero_records() -> List[IdentityRecord]:
    records = []
    for n, rational, sixth, third, square, product, argument in _ZERO_ROWS:
        point = HeegnerPoint.half_integer(n)
        surds = [(Fraction(sixth), Fraction(1, 6))]
        if third is not None:
            surds.append((Fraction(third), Fraction(1, 3)))
        printed = None
        notes: Tuple[str, ...] = ()
        if n == 43:
            printed = H43_PRINTED_ARGUMENT
            notes = ("printed argument 512000/512000 of the middle factor is a typo for 512000/512001",)
        records.append(IdentityRecord(
            id=f"zero.{point.label}",
            kind=IdentityKind.HYP_ZERO,
            heegner=point,
            lhs=ClosedFormConstant(rational, surds=tuple(surds), pi_exponent=3, gammas=_GAMMA_THIRD),
            hyp=HypDescriptor(ZERO_PARAMS, square, product, argument, printed_product_argument=printed),
            notes=notes,
        ))
    return records


def _eta_records() -> List[IdentityRecord]:
    return [
        # eta(i) = Gamma(1/4)/(2 pi^(3/4))
        IdentityRecord(
            id="eta.i",
            kind=IdentityKind.ETA_SPECIAL,
            heegner=HeegnerPoint.sqrt_minus(1),
            lhs=ClosedFormConstant(Fraction(1, 2), pi_exponent=Fraction(-3, 4), gammas=((Fraction(1, 4), 1),)),
            quantity="eta",
        ),
        # eta(rho)^2 = 3^(1/4) Gamma(1/3)^3/(4 pi^2 e^(pi i/12))
        IdentityRecord(
            id="eta.rho",
            kind=IdentityKind.ETA_SPECIAL,
            heegner=HeegnerPoint.half_integer(3),
            lhs=ClosedFormConstant(Fraction(1, 4), surds=((3, Fraction(1, 4)),), pi_exponent=-2,
                                   gammas=((Fraction(1, 3), 3),), phase=Fraction(-1, 12)),
            quantity="eta^2",
        ),
    ]


def gamma_product(p: int) -> ClosedFormConstant:
    """prod_{n<p} Gamma(n/p)^((w/4) chi(n)), w = 6 for p = 3 and 2 otherwise."""
    if p not in CLASS_NUMBER_ONE_PRIMES:
        raise ParameterError(f"p = {p} is not an odd prime with h(-p) = 1; expected one of {CLASS_NUMBER_ONE_PRIMES}")
    w = 6 if p == 3 else 2
    return ClosedFormConstant(
        Fraction(1),
        gammas=tuple((Fraction(n, p), Fraction(w, 4) * legendre_symbol(n, p)) for n in range(1, p)),
    )


def _chowla_selberg_records() -> List[IdentityRecord]:
    return [
        IdentityRecord(id=f"cs.p{p}", kind=IdentityKind.CHOWLA_SELBERG, heegner=HeegnerPoint.half_integer(p),
                       lhs=gamma_product(p), prime=p)
        for p in CLASS_NUMBER_ONE_PRIMES
    ]


@lru_cache(maxsize=1)
def _catalog() -> Tuple[IdentityRecord, ...]:
    records = (_table_records() + _series_records() + _one_records() + _zero_records()
               + _eta_records() + _chowla_selberg_records())
    logger.debug("Catalog built with %d records", len(records))
    return tuple(records)


def catalog() -> List[IdentityRecord]:
    return list(_catalog())


def catalog_ids() -> List[str]:
    return sorted(record.id for record in _catalog())


def get_record(identity_id: str) -> IdentityRecord:
    for record in _catalog():
        if record.id == identity_id:
            return record
    raise UnknownIdentityError(identity_id, catalog_ids())


def records_in_group(group: str) -> List[IdentityRecord]:
    """Records whose id starts with group, e.g. 'series', 'zero' or 'table.s2'."""
    prefix = group.rstrip(".") + "."
    return [record for record in _catalog() if record.id.startswith(prefix)]
