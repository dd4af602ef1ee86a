# Author: Victor
# Page name: hypergeom.py
# Page purpose: Pochhammer symbols, 2F1/3F2 evaluation and Kummer's local solutions
# Date of creation: 2026-10-16
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import mpmath
from mpmath import mp, mpc, mpf

from errors import DivergenceError, ParameterError, PoleError, RegimeError
from kernel import (
    PrecisionContext,
    ap_rational,
    digamma_base,
    gamma_ap,
    principal_log,
    principal_power,
    to_ap,
)

logger = logging.getLogger(__name__)

DIRECT_RADIUS = Fraction(3, 4)
CONNECTION_RADIUS = Fraction(3, 4)
# inside this distance of z = 1 the direct series is never used
FORCED_CONNECTION_RADIUS = Fraction(1, 4)


def _is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypParams:
    """Exact parameters of 2F1(a, b; c; z)."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if _is_nonpositive_integer(self.c):
            raise ParameterError(f"c = {self.c} is a nonpositive integer")

    @property
    def logarithmic_at_1(self) -> bool:
        return (self.c - self.a - self.b).denominator == 1

    @property
    def balanced(self) -> bool:
        """c = a + b, the case the logarithmic connection formula covers."""
        return self.c == self.a + self.b

    def shifted(self, k: int) -> "HypParams":
        return HypParams(self.a + k, self.b + k, self.c + k)

    def __str__(self):
        return f"({self.a}, {self.b}; {self.c})"


@dataclass(frozen=True)
class Hyp32Params:
    """Exact parameters of 3F2(a1, a2, a3; b1, b2; z)."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "b1", "b2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        for b in (self.b1, self.b2):
            if _is_nonpositive_integer(b):
                raise ParameterError(f"lower parameter {b} is a nonpositive integer")

    @property
    def upper(self) -> Tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3)

    @property
    def lower(self) -> Tuple[Fraction, ...]:
        return (self.b1, self.b2)


class HypRegime(str, Enum):
    DIRECT = "direct_series"
    CONNECTION = "connection_at_1"


@dataclass(frozen=True)
class HypEvaluation:
    value: object
    regime: HypRegime
    terms: int


# parameter sets of the three main families
INF_PARAMS = HypParams(Fraction(1, 12), Fraction(5, 12), Fraction(1))
ONE_PARAMS = HypParams(Fraction(1, 12), Fraction(5, 12), Fraction(1, 2))
ZERO_PARAMS = HypParams(Fraction(1, 12), Fraction(7, 12), Fraction(2, 3))
CATALOG_PARAMS = (INF_PARAMS, ONE_PARAMS, ZERO_PARAMS)
# five points per parameter set; the balanced sets include connection-regime points
ODE_SAMPLE_POINTS = {
    INF_PARAMS: ("0.2", "-0.5", "0.7", "0.3+0.4j", "-0.2-0.6j"),
    ONE_PARAMS: ("0.2", "-0.5", "0.95", "0.7+0.4j", "1.3-0.2j"),
    ZERO_PARAMS: ("0.2", "-0.5", "0.95", "0.7+0.4j", "1.3-0.2j"),
}


def pochhammer(alpha, n: int) -> Fraction:
    """Rising factorial alpha(alpha+1)...(alpha+n-1), exact."""
    if n < 0:
        raise ParameterError(f"Pochhammer index must be nonnegative, got {n}")
    alpha = Fraction(alpha)
    result = Fraction(1)
    for k in range(n):
        result *= alpha + k
    return result


def sextuple_identity(n: int) -> Tuple[Fraction, Fraction]:
    """(1/6)_n (5/6)_n (1/2)_n next to 12^(-3n) (6n)!/(3n)!."""
    lhs = (
        pochhammer(Fraction(1, 6), n)
        * pochhammer(Fraction(5, 6), n)
        * pochhammer(Fraction(1, 2), n)
    )
    rhs = Fraction(math.factorial(6 * n), math.factorial(3 * n) * 12 ** (3 * n))
    return lhs, rhs


def _on_cut(z) -> bool:
    imag = z.imag if isinstance(z, mpc) else 0
    real = z.real if isinstance(z, mpc) else z
    return imag == 0 and real >= 1


def choose_regime(p: HypParams, z) -> HypRegime:
    z = to_ap(z)
    dist_to_one = abs(1 - z)
    if dist_to_one < ap_rational(FORCED_CONNECTION_RADIUS):
        if not p.balanced:
            raise RegimeError(f"z = {mpmath.nstr(z, 15)} is too close to 1 for {p} (c != a + b)")
        if _on_cut(z):
            raise RegimeError(f"z = {mpmath.nstr(z, 15)} lies on the branch cut [1, inf)")
        return HypRegime.CONNECTION
    if abs(z) <= ap_rational(DIRECT_RADIUS):
        return HypRegime.DIRECT
    if p.balanced and dist_to_one <= ap_rational(CONNECTION_RADIUS) and not _on_cut(z):
        return HypRegime.CONNECTION
    raise RegimeError(f"z = {mpmath.nstr(z, 15)} is outside every evaluation regime for {p}")


MIN_TERM_ESTIMATE = 32


def _estimated_terms(working_bits: int, radius) -> int:
    """Terms needed for radius^N < 2^-working_bits, plus a margin."""
    if radius == 0:
        return MIN_TERM_ESTIMATE
    with mpmath.workprec(64):
        # radius may sit far below the float range near J = 0
        bits_per_term = -mpmath.log(radius, 2)
    if bits_per_term <= 0:
        # no convergence; the series guard stops after a budget tied to the precision
        return working_bits
    if bits_per_term >= working_bits:
        return MIN_TERM_ESTIMATE
    return int(mpmath.ceil(working_bits / bits_per_term)) + MIN_TERM_ESTIMATE


def _term_ratio(upper: Sequence[Fraction], lower: Sequence[Fraction], n: int) -> Fraction:
    ratio = Fraction(1, n + 1)
    for a in upper:
        ratio *= n + a
    for b in lower:
        ratio /= n + b
    return ratio


def ratio_supremum(upper: Sequence[Fraction], lower: Sequence[Fraction], n: int):
    """Bound on |t_{m+1}/t_m| / |z| over all m >= n, or None while a lower factor can vanish."""
    lowers = list(lower) + [Fraction(1)]
    bound = Fraction(1)
    for a, b in zip(upper, lowers):
        if n + b <= 0:
            return None
        # (m + |a|)/(m + b) is monotone in m and tends to 1
        bound *= max(Fraction(1), (n + abs(a)) / (n + b))
    return bound


def _direct_series(upper, lower, z, max_terms: int):
    """Sum of the pFq series with p = q + 1, stopped by a ratio majorant on the tail."""
    if z == 0:
        return mpf(1), 1
    eps = mpmath.ldexp(1, -mp.prec)
    abs_z = abs(z)
    total = mpf(1)
    term = mpf(1)
    n = 0
    while True:
        ratio = _term_ratio(upper, lower, n)
        if ratio == 0:
            return total, n + 1
        term = term * ap_rational(ratio) * z
        n += 1
        total += term
        sup = ratio_supremum(upper, lower, n)
        if sup is not None:
            bound = ap_rational(sup) * abs_z
            if bound < 1 and abs(term) * bound / (1 - bound) <= eps * abs(total):
                return total, n + 1
        if n > max_terms:
            raise DivergenceError(f"series did not converge in {max_terms} terms at |z| = {mpmath.nstr(abs_z, 8)}")


def _gauss_direct(p: HypParams, z, order: int, max_terms: int):
    factor = Fraction(1)
    for k in range(order):
        factor *= (p.a + k) * (p.b + k) / (p.c + k)
    shifted = p.shifted(order)
    value, terms = _direct_series((shifted.a, shifted.b), (shifted.c,), z, max_terms)
    return ap_rational(factor) * value, terms


def _gauss_connection(p: HypParams, z, ctx: PrecisionContext, order: int, max_terms: int):
    """c = a + b expansion in w = 1 - z; order 1 and 2 differentiate it termwise."""
    a, b = p.a, p.b
    w = 1 - z
    log_w = principal_log(w, ctx)
    abs_w = abs(w)
    abs_log = abs(log_w)
    eps = mpmath.ldexp(1, -mp.prec)
    gamma_factor = gamma_ap(a + b, ctx) / (gamma_ap(a, ctx) * gamma_ap(b, ctx))
    d_n = 2 * digamma_base(1, ctx) - digamma_base(a, ctx) - digamma_base(b, ctx)
    coefficient = mpf(1)
    w_power = w ** (-order) if order else mpf(1)
    total = mpf(0)
    n = 0
    while True:
        shifted_log = d_n - log_w
        if order == 0:
            shape = shifted_log
        elif order == 1:
            shape = n * shifted_log - 1
        else:
            shape = n * (n - 1) * shifted_log - (2 * n - 1)
        total += coefficient * shape * w_power
        coefficient *= ap_rational((a + n) * (b + n) / Fraction((n + 1) ** 2))
        d_n += ap_rational(Fraction(2, n + 1) - 1 / (a + n) - 1 / (b + n))
        w_power *= w
        n += 1
        # |shape_m| <= (m + 1)^order (|D_m| + |log w| + 2) and |D_m| is nonincreasing for 0 < a, b <= 1
        sup = (n + abs(a)) * (n + abs(b)) / Fraction((n + 1) ** 2)
        growth = ap_rational(max(Fraction(1), sup) * Fraction(n + 2, n + 1) ** order) * abs_w
        if growth < 1:
            envelope = abs(coefficient) * abs(w_power) * (n + 1) ** order * (abs(d_n) + abs_log + 2)
            if envelope / (1 - growth) <= eps * abs(total):
                break
        if n > max_terms:
            raise DivergenceError(f"connection series did not converge in {max_terms} terms")
    value = gamma_factor * total
    if order == 1:
        value = -value
    return value, n


def _check_forced_regime(p: HypParams, z, regime: HypRegime):
    if regime is HypRegime.CONNECTION:
        if not p.balanced:
            raise RegimeError(f"the connection expansion needs c = a + b, got {p}")
        if _on_cut(z):
            raise RegimeError(f"z = {mpmath.nstr(z, 15)} lies on the branch cut [1, inf)")


def evaluate_2f1(p: HypParams, z, ctx: PrecisionContext, order: int = 0,
                 regime: Optional[HypRegime] = None) -> HypEvaluation:
    """2F1 or its first/second z-derivative, with the regime and term count used.

    regime forces DIRECT or CONNECTION instead of the automatic choice; a forced direct series
    outside the unit disc ends in DivergenceError.
    """
    if order not in (0, 1, 2):
        raise ParameterError(f"derivative order must be 0, 1 or 2, got {order}")
    with ctx.workprec():
        z = to_ap(z)
        if regime is None:
            regime = choose_regime(p, z)
        else:
            regime = HypRegime(regime)
            _check_forced_regime(p, z, regime)
        radius = abs(z) if regime is HypRegime.DIRECT else abs(1 - z)
    estimate = _estimated_terms(ctx.working_bits, radius)
    inner = ctx.for_terms(estimate)
    max_terms = 8 * estimate + 64
    with inner.workprec():
        z = to_ap(z)
        if regime is HypRegime.DIRECT:
            value, terms = _gauss_direct(p, z, order, max_terms)
        else:
            value, terms = _gauss_connection(p, z, inner, order, max_terms)
    logger.debug("2F1%s order %d at z=%s: %s, %d terms", p, order, mpmath.nstr(z, 10), regime.value, terms)
    return HypEvaluation(value=value, regime=regime, terms=terms)


def gauss_2f1(p: HypParams, z, ctx: PrecisionContext):
    return evaluate_2f1(p, z, ctx, 0).value


def gauss_2f1_dz(p: HypParams, z, ctx: PrecisionContext):
    return evaluate_2f1(p, z, ctx, 1).value


def gauss_2f1_d2z(p: HypParams, z, ctx: PrecisionContext):
    return evaluate_2f1(p, z, ctx, 2).value


def gen_3f2(params: Hyp32Params, z, ctx: PrecisionContext):
    with ctx.workprec():
        z = to_ap(z)
        radius = abs(z)
        if radius > ap_rational(DIRECT_RADIUS):
            raise RegimeError(f"3F2 needs |z| <= 3/4, got |z| = {mpmath.nstr(radius, 10)}")
    estimate = _estimated_terms(ctx.working_bits, radius)
    with ctx.for_terms(estimate).workprec():
        value, terms = _direct_series(params.upper, params.lower, to_ap(z), 8 * estimate + 64)
    logger.debug("3F2 at z=%s: %d terms", mpmath.nstr(z, 10), terms)
    return value


def hyp_ode_residual(p: HypParams, z, ctx: PrecisionContext):
    """Scaled residual of z(1-z)F'' + [c - (a+b+1)z]F' - abF at z."""
    f0 = gauss_2f1(p, z, ctx)
    f1 = gauss_2f1_dz(p, z, ctx)
    f2 = gauss_2f1_d2z(p, z, ctx)
    with ctx.workprec():
        z = to_ap(z)
        parts = (
            z * (1 - z) * f2,
            (ap_rational(p.c) - ap_rational(p.a + p.b + 1) * z) * f1,
            -ap_rational(p.a * p.b) * f0,
        )
        scale = sum(abs(x) for x in parts)
        return abs(sum(parts)) / scale


def _gamma_rational(x: Fraction, ctx: PrecisionContext):
    """Gamma at any non-pole rational by shifting into the positive axis."""
    x = Fraction(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x}")
    if x > 0:
        return gamma_ap(x, ctx)
    shift = math.ceil(1 - x)
    product = Fraction(1)
    for k in range(shift):
        product *= x + k
    with ctx.workprec():
        return gamma_ap(x + shift, ctx) / ap_rational(product)


@dataclass(frozen=True)
class LocalSolution:
    """z^e0 (1-z)^e1 2F1(params; argument(z)) around one singular point."""

    point: str
    z_exponent: Fraction
    one_minus_z_exponent: Fraction
    params: HypParams
    argument: str  # "z", "1-z" or "1/z"

    def mapped_argument(self, z):
        if self.argument == "z":
            return z
        if self.argument == "1-z":
            return 1 - z
        return 1 / z

    def evaluate(self, z, ctx: PrecisionContext):
        with ctx.workprec():
            z = to_ap(z)
            x = self.mapped_argument(z)
        value = gauss_2f1(self.params, x, ctx)
        with ctx.workprec():
            if self.z_exponent:
                value *= principal_power(z, self.z_exponent, ctx)
            if self.one_minus_z_exponent:
                value *= principal_power(1 - z, self.one_minus_z_exponent, ctx)
            return value


def _normalize_point(point) -> str:
    if point in (0, "0"):
        return "0"
    if point in (1, "1"):
        return "1"
    if point in ("inf", "infinity", "∞") or point == math.inf:
        return "inf"
    raise ParameterError(f"singular point must be 0, 1 or infinity, got {point!r}")


def kummer_local_solutions(p: HypParams, point) -> Tuple[LocalSolution, LocalSolution]:
    """The fundamental pair of the hypergeometric equation at 0, 1 or infinity."""
    point = _normalize_point(point)
    a, b, c = p.a, p.b, p.c
    zero = Fraction(0)
    if point == "0":
        if c.denominator == 1:
            raise ParameterError(f"c = {c} is an integer; the pair at 0 degenerates")
        return (
            LocalSolution("0", zero, zero, p, "z"),
            LocalSolution("0", 1 - c, zero, HypParams(a - c + 1, b - c + 1, 2 - c), "z"),
        )
    if point == "1":
        if (c - a - b).denominator == 1:
            raise ParameterError(f"c - a - b = {c - a - b} is an integer; the pair at 1 is logarithmic")
        return (
            LocalSolution("1", zero, zero, HypParams(a, b, a + b - c + 1), "1-z"),
            LocalSolution("1", zero, c - a - b, HypParams(c - a, c - b, c - a - b + 1), "1-z"),
        )
    if (a - b).denominator == 1:
        raise ParameterError(f"a - b = {a - b} is an integer; the pair at infinity is logarithmic")
    return (
        LocalSolution("inf", -a, zero, HypParams(a, a - c + 1, a - b + 1), "1/z"),
        LocalSolution("inf", -b, zero, HypParams(b, b - c + 1, b - a + 1), "1/z"),
    )


def gauss_connection_at_1(p: HypParams, z, ctx: PrecisionContext):
    """F(a,b;c;z) rebuilt from the pair at z = 1 with Gauss's Gamma coefficients."""
    first, second = kummer_local_solutions(p, 1)
    a, b, c = p.a, p.b, p.c
    u1 = first.evaluate(z, ctx)
    u2 = second.evaluate(z, ctx)
    with ctx.workprec():
        coefficient1 = (_gamma_rational(c, ctx) * _gamma_rational(c - a - b, ctx)) / (
            _gamma_rational(c - a, ctx) * _gamma_rational(c - b, ctx)
        )
        coefficient2 = (_gamma_rational(c, ctx) * _gamma_rational(a + b - c, ctx)) / (
            _gamma_rational(a, ctx) * _gamma_rational(b, ctx)
        )
        return coefficient1 * u1 + coefficient2 * u2
