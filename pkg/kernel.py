# Author: Victor
# Page name: kernel.py
# Page purpose: Precision contexts, principal-branch roots and the Gamma/digamma functions
# Date of creation: 2026-10-16
# Every other module works through this file: it decides how many bits a computation
# carries, how roots and logs pick their branch, and how Gamma/psi are evaluated at
# positive rationals.
import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import mpmath
from mpmath import mp, mpc, mpf

from errors import ParameterError, PrecisionError

logger = logging.getLogger(__name__)

DEFAULT_GUARD_BITS = 96
MIN_GUARD_BITS = 64
# values this close (relative, in bits below working precision) to the negative
# real axis are treated as lying on it
CUT_SLACK_BITS = 48
# Gamma/psi: extra bits for the exp/log of a large log-gamma value
SPECIAL_FUNCTION_EXTRA_BITS = 32

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class PrecisionContext:
    digits: int
    target_bits: int
    guard_bits: int = DEFAULT_GUARD_BITS

    @property
    def working_bits(self) -> int:
        return self.target_bits + self.guard_bits

    @property
    def tolerance(self) -> mpf:
        """Relative error every operation at this context must meet."""
        return mpmath.ldexp(1, -self.working_bits + 4)

    @property
    def cut_tolerance(self) -> mpf:
        return mpmath.ldexp(1, -(self.working_bits - CUT_SLACK_BITS))

    @property
    def verification_threshold(self) -> mpf:
        with self.workprec():
            return mpf(10) ** (-(self.digits - 10))

    def workprec(self):
        return mpmath.workprec(self.working_bits)

    def for_terms(self, term_count: int) -> "PrecisionContext":
        """Context whose guard bits absorb rounding over term_count summands."""
        needed = MIN_GUARD_BITS + math.ceil(math.log2(max(term_count, 1)))
        if needed <= self.guard_bits:
            return self
        return replace(self, guard_bits=needed)

    def with_digits(self, digits: int) -> "PrecisionContext":
        return make_context(digits, guard_bits=self.guard_bits)


def make_context(decimal_digits: int, guard_bits: int = DEFAULT_GUARD_BITS) -> PrecisionContext:
    if isinstance(decimal_digits, bool) or not isinstance(decimal_digits, int):
        raise PrecisionError(f"decimal_digits must be an integer, got {decimal_digits!r}")
    if decimal_digits < 1:
        raise PrecisionError("decimal_digits must be at least 1")
    if guard_bits < MIN_GUARD_BITS:
        raise PrecisionError(f"guard_bits must be at least {MIN_GUARD_BITS}")
    # ceil(d*log2(10)) exactly: 10^d is never a power of two
    target_bits = (10 ** decimal_digits).bit_length()
    return PrecisionContext(digits=decimal_digits, target_bits=target_bits, guard_bits=guard_bits)


def ap_rational(x: Rational) -> mpf:
    """Round an exact rational to the current working precision."""
    x = Fraction(x)
    if x.denominator == 1:
        return mpf(x.numerator)
    return mpf(x.numerator) / x.denominator


def to_ap(value):
    if isinstance(value, (mpf, mpc)):
        return value
    if isinstance(value, Fraction):
        return ap_rational(value)
    if isinstance(value, complex):
        return mpc(value.real, value.imag)
    return mpmath.mpmathify(value)


def _cut_tolerance(ctx: Optional[PrecisionContext]) -> mpf:
    if ctx is not None:
        return ctx.cut_tolerance
    return mpmath.ldexp(1, -(mp.prec - CUT_SLACK_BITS))


def snap_to_cut(z, ctx: Optional[PrecisionContext] = None):
    """Put a complex value with rounding-level imaginary part on the negative axis."""
    z = to_ap(z)
    if isinstance(z, mpc) and z.real < 0 and abs(z.imag) <= _cut_tolerance(ctx) * abs(z):
        return mpf(z.real)
    return z


def principal_log(z, ctx: Optional[PrecisionContext] = None):
    z = snap_to_cut(z, ctx)
    if z == 0:
        raise ParameterError("log(0) is undefined")
    # mpmath.log gives Arg in (-pi, pi], with +pi on the negative real axis
    return mpmath.log(z)


def principal_root(z, n: int, ctx: Optional[PrecisionContext] = None):
    """exp(log(z)/n) on the principal branch."""
    if n < 1:
        raise ParameterError(f"root index must be positive, got {n}")
    z = snap_to_cut(z, ctx)
    if z == 0:
        return mpf(0)
    if n == 1:
        return z
    if n == 2:
        return mpmath.sqrt(z)
    return mpmath.exp(principal_log(z, ctx) / n)


def principal_power(z, exponent: Rational, ctx: Optional[PrecisionContext] = None):
    """z**exponent for a rational exponent, principal branch."""
    exponent = Fraction(exponent)
    z = snap_to_cut(z, ctx)
    if ctx is not None and abs(z) <= ctx.tolerance:
        z = 0
    if z == 0:
        if exponent > 0:
            return mpf(0)
        raise ParameterError("nonpositive power of zero")
    if exponent.denominator == 1:
        return z ** exponent.numerator
    if exponent.denominator == 2:
        return principal_root(z, 2, ctx) ** exponent.numerator
    return mpmath.exp(principal_log(z, ctx) * ap_rational(exponent))


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Exact B_n (B_1 = -1/2 convention)."""
    p, q = mpmath.bernfrac(n)
    return Fraction(int(p), int(q))


def _asymptotic_shift(prec: int) -> int:
    # at z >= prec/4 the Stirling/psi tails drop below 2^-prec long before they diverge
    return prec // 4 + 10


def _check_positive(x, name: str) -> Fraction:
    try:
        x = Fraction(x)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"{name} needs a rational argument, got {x!r}") from exc
    if x <= 0:
        raise ParameterError(f"{name} is only implemented for positive rationals, got {x}")
    return x


def _stirling_log_gamma(z: mpf) -> mpf:
    eps = mpmath.ldexp(1, -mp.prec)
    total = (z - mpf(1) / 2) * mpmath.log(z) - z + mpmath.log(2 * mpmath.pi) / 2
    z_power = z
    z_squared = z * z
    k = 1
    while True:
        coefficient = bernoulli_number(2 * k) / (2 * k * (2 * k - 1))
        term = ap_rational(coefficient) / z_power
        if abs(term) < eps * abs(total):
            break
        total += term
        z_power *= z_squared
        k += 1
        if k > mp.prec:
            raise PrecisionError("Stirling series did not reach working precision")
    return total


def _asymptotic_digamma(z: mpf) -> mpf:
    eps = mpmath.ldexp(1, -mp.prec)
    total = mpmath.log(z) - 1 / (2 * z)
    z_squared = z * z
    z_power = z_squared
    k = 1
    while True:
        term = ap_rational(bernoulli_number(2 * k) / (2 * k)) / z_power
        if abs(term) < eps * max(abs(total), 1):
            break
        total -= term
        z_power *= z_squared
        k += 1
        if k > mp.prec:
            raise PrecisionError("digamma asymptotic series did not reach working precision")
    return total


def gamma_ap(x: Rational, ctx: PrecisionContext) -> mpf:
    """Gamma at a positive rational: upward recurrence, then Stirling."""
    x = _check_positive(x, "gamma_ap")
    with mpmath.workprec(ctx.working_bits + SPECIAL_FUNCTION_EXTRA_BITS):
        shift = max(0, math.ceil(_asymptotic_shift(mp.prec) - x))
        product = Fraction(1)
        for k in range(shift):
            product *= x + k
        log_gamma = _stirling_log_gamma(ap_rational(x + shift))
        value = mpmath.exp(log_gamma) / ap_rational(product)
    with ctx.workprec():
        return +value


def digamma_ap(x: Rational, ctx: PrecisionContext) -> mpf:
    """psi(x) = psi(x + m) - sum_{k<m} 1/(x + k) with the asymptotic series at x + m."""
    x = _check_positive(x, "digamma_ap")
    with mpmath.workprec(ctx.working_bits + SPECIAL_FUNCTION_EXTRA_BITS):
        shift = max(0, math.ceil(_asymptotic_shift(mp.prec) - x))
        correction = mpf(0)
        for k in range(shift):
            correction += 1 / ap_rational(x + k)
        value = _asymptotic_digamma(ap_rational(x + shift)) - correction
    with ctx.workprec():
        return +value


@lru_cache(maxsize=512)
def _digamma_cached(x: Fraction, working_bits: int, digits: int, target_bits: int) -> mpf:
    ctx = PrecisionContext(digits=digits, target_bits=target_bits, guard_bits=working_bits - target_bits)
    return digamma_ap(x, ctx)


def digamma_base(x: Rational, ctx: PrecisionContext) -> mpf:
    """Cached psi(x); the hypergeometric connection formula asks for a few fixed values."""
    return _digamma_cached(Fraction(x), ctx.working_bits, ctx.digits, ctx.target_bits)


def relative_difference(a, b) -> mpf:
    diff = abs(a - b)
    scale = abs(b)
    if scale == 0:
        return diff
    return diff / scale
