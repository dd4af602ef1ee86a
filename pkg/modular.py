# Author: Victor
# Page name: modular.py
# Page purpose: Eisenstein series, Dedekind eta, Weber f, Klein J and the regions of the upper half-plane
# Date of creation: 2026-10-16
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import gmpy2
import mpmath
from mpmath import mp, mpc, mpf

from errors import ConsistencyError, DivergenceError, DomainError, ParameterError, PoleError, RegimeError
from kernel import PrecisionContext, to_ap

logger = logging.getLogger(__name__)

MIN_IMAG = mpf("0.3")
WEBER_MIN_IMAG = mpf("0.6")

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
IDENTITY: Matrix = ((1, 0), (0, 1))


@dataclass(frozen=True)
class TauPoint:
    """A point of the upper half-plane."""

    tau: mpc

    def __post_init__(self):
        value = to_ap(self.tau)
        if not isinstance(value, mpc):
            value = mpc(value)
        if value.imag <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {value}")
        object.__setattr__(self, "tau", value)

    @property
    def real(self) -> mpf:
        return self.tau.real

    @property
    def imag(self) -> mpf:
        return self.tau.imag

    @property
    def q(self) -> mpc:
        return mpmath.expjpi(2 * self.tau)

    @classmethod
    def from_form(cls, a: int, b: int, c: int, ctx: PrecisionContext) -> "TauPoint":
        """Root (-b + i sqrt(4ac - b^2))/(2a) of a positive definite form."""
        d = 4 * a * c - b * b
        if a <= 0 or d <= 0:
            raise ParameterError(f"({a}, {b}, {c}) is not a positive definite form")
        with ctx.workprec():
            return cls(mpc(-b, mpmath.sqrt(d)) / (2 * a))

    @classmethod
    def sqrt_minus(cls, n: int, ctx: PrecisionContext) -> "TauPoint":
        return cls.from_form(1, 0, n, ctx)

    @classmethod
    def half_integer(cls, n: int, ctx: PrecisionContext) -> "TauPoint":
        """(-1 + sqrt(-n))/2 for n = 3 (mod 4)."""
        if n % 4 != 3:
            raise ParameterError(f"(-1 + sqrt(-{n}))/2 needs n = 3 mod 4")
        return cls.from_form(1, 1, (n + 1) // 4, ctx)

    def __str__(self):
        return mpmath.nstr(self.tau, 15)


@dataclass(frozen=True)
class HeegnerPoint:
    """Positive definite form (a, b, c); tau = (-b + i sqrt(d))/(2a), d = 4ac - b^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.d <= 0:
            raise ParameterError(f"({self.a}, {self.b}, {self.c}) is not a positive definite form")

    @property
    def d(self) -> int:
        return 4 * self.a * self.c - self.b * self.b

    def tau(self, ctx: PrecisionContext) -> TauPoint:
        return TauPoint.from_form(self.a, self.b, self.c, ctx)

    @property
    def label(self) -> str:
        if self.a == 1 and self.b == 0:
            return f"sqrt-{self.c}"
        if self.a == 1 and self.b == 1:
            return f"halfint-{self.d}"
        return f"form-{self.a}-{self.b}-{self.c}"

    @classmethod
    def sqrt_minus(cls, n: int) -> "HeegnerPoint":
        return cls(1, 0, n)

    @classmethod
    def half_integer(cls, n: int) -> "HeegnerPoint":
        if n % 4 != 3:
            raise ParameterError(f"(-1 + sqrt(-{n}))/2 needs n = 3 mod 4")
        return cls(1, 1, (n + 1) // 4)

    @classmethod
    def parse(cls, text: str) -> "HeegnerPoint":
        """'a,b,c' -> HeegnerPoint."""
        try:
            a, b, c = (int(part) for part in text.split(","))
        except ValueError as exc:
            raise ParameterError(f"expected three integers a,b,c, got {text!r}") from exc
        return cls(a, b, c)


class RegionId(str, Enum):
    C_INF = "C_inf"
    C_ONE = "C_one"
    C_ZERO = "C_zero"


class Verdict(str, Enum):
    IN = "in"
    OUT = "out"
    BOUNDARY = "boundary"


def _require_regime(tau: TauPoint, minimum: mpf = MIN_IMAG):
    if tau.imag < minimum:
        raise RegimeError(f"Im(tau) = {mpmath.nstr(tau.imag, 8)} is below {minimum}; reduce tau first")


def _truncation(imag, working_bits: int) -> int:
    return math.ceil((working_bits + 32) * math.log(2) / (2 * math.pi * float(imag))) + 16


@lru_cache(maxsize=256)
def _eisenstein_triple(re: mpf, im: mpf, working_bits: int) -> Tuple[mpc, mpc, mpc]:
    n_terms = _truncation(im, working_bits)
    with mpmath.workprec(working_bits + n_terms.bit_length() + 8):
        q = mpmath.expjpi(2 * mpc(re, im))
        s1 = s3 = s5 = mpf(0)
        q_n = mpf(1)
        for n in range(1, n_terms + 1):
            q_n *= q
            lambert = q_n / (1 - q_n)
            s1 += n * lambert
            s3 += n ** 3 * lambert
            s5 += n ** 5 * lambert
        result = (1 - 24 * s1, 1 + 240 * s3, 1 - 504 * s5)
    logger.debug("Eisenstein series at tau=%s+%si: %d terms", mpmath.nstr(re, 8), mpmath.nstr(im, 8), n_terms)
    return result


def eisenstein(k: int, tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """Normalized E_k for k in {2, 4, 6}, Lambert series."""
    if k not in (2, 4, 6):
        raise ParameterError(f"weight must be 2, 4 or 6, got {k}")
    _require_regime(tau)
    triple = _eisenstein_triple(tau.real, tau.imag, ctx.working_bits)
    with ctx.workprec():
        return +triple[k // 2 - 1]


@lru_cache(maxsize=256)
def _eta(re: mpf, im: mpf, working_bits: int) -> mpc:
    with mpmath.workprec(working_bits + 16):
        tau = mpc(re, im)
        q = mpmath.expjpi(2 * tau)
        abs_q = abs(q)
        eps = mpmath.ldexp(1, -mp.prec)
        total = mpf(1)
        k = 1
        # Euler: prod (1 - q^n) = sum (-1)^k q^(k(3k-1)/2)
        while True:
            sign = -1 if k % 2 else 1
            total += sign * (q ** (k * (3 * k - 1) // 2) + q ** (k * (3 * k + 1) // 2))
            if abs_q ** ((k + 1) * (3 * k + 2) // 2) < eps:
                break
            k += 1
        return mpmath.expjpi(tau / 12) * total


def dedekind_eta(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    _require_regime(tau)
    value = _eta(tau.real, tau.imag, ctx.working_bits)
    with ctx.workprec():
        return +value


def weber_f(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """e^(-pi i/24) eta((1+tau)/2)/eta(tau)."""
    _require_regime(tau, WEBER_MIN_IMAG)
    with ctx.workprec():
        half = TauPoint((1 + tau.tau) / 2)
    numerator = dedekind_eta(half, ctx)
    denominator = dedekind_eta(tau, ctx)
    with ctx.workprec():
        return mpmath.expjpi(mpf(-1) / 24) * numerator / denominator


def _eta24(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    eta = dedekind_eta(tau, ctx)
    with ctx.workprec():
        return eta ** 24


def discriminant_pair(tau: TauPoint, ctx: PrecisionContext) -> Tuple[mpc, mpc]:
    """(2pi)^12 eta^24 next to (2pi)^12 (E4^3 - E6^2)/1728."""
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    eta24 = _eta24(tau, ctx)
    with ctx.workprec():
        scale = (2 * mpmath.pi) ** 12
        return scale * eta24, scale * (e4 ** 3 - e6 ** 2) / 1728


def discriminant_tau(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    from_eta, from_eisenstein = discriminant_pair(tau, ctx)
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    with ctx.workprec():
        # E4^3 - E6^2 cancels; its error scales with the size of the two cubes
        magnitude = (2 * mpmath.pi) ** 12 * (abs(e4) ** 3 + abs(e6) ** 2) / 1728
        if abs(from_eta - from_eisenstein) > ctx.cut_tolerance * magnitude:
            raise ConsistencyError(
                f"Delta(tau) from eta and from E4, E6 disagree at tau = {tau}: "
                f"{mpmath.nstr(from_eta, 20)} vs {mpmath.nstr(from_eisenstein, 20)}"
            )
        return from_eta


def klein_J(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """J = E4^3/(1728 eta^24), normalized so J(i) = 1."""
    e4 = eisenstein(4, tau, ctx)
    eta24 = _eta24(tau, ctx)
    with ctx.workprec():
        return e4 ** 3 / (1728 * eta24)


def klein_J_minus_one(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """J - 1 = E6^2/(1728 eta^24), without cancellation near tau = i."""
    e6 = eisenstein(6, tau, ctx)
    eta24 = _eta24(tau, ctx)
    with ctx.workprec():
        return e6 ** 2 / (1728 * eta24)


def klein_j(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    value = klein_J(tau, ctx)
    with ctx.workprec():
        return 1728 * value


def _near_zero(value, scale, ctx: PrecisionContext) -> bool:
    return abs(value) <= ctx.cut_tolerance * max(abs(scale), 1)


def s2(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """E4/E6 (E2 - 3/(pi Im tau))."""
    e2 = eisenstein(2, tau, ctx)
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    with ctx.workprec():
        if _near_zero(e6, abs(e4) ** mpf(1.5), ctx):
            raise PoleError(f"E6 vanishes at tau = {tau}; s2 has a pole there")
        return e4 / e6 * (e2 - 3 / (mpmath.pi * tau.imag))


def dJ_dtau(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """J' = -2 pi i J E6/E4, written as -2 pi i E4^2 E6/(1728 eta^24)."""
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    eta24 = _eta24(tau, ctx)
    with ctx.workprec():
        if _near_zero(e4, abs(e6) ** (mpf(2) / 3), ctx):
            raise PoleError(f"E4 vanishes at tau = {tau}; J E6/E4 is singular there")
        return mpc(0, -2) * mpmath.pi * e4 ** 2 * e6 / (1728 * eta24)


def e2_at_rho(ctx: PrecisionContext) -> mpf:
    """E2(rho) = 2 sqrt(3)/pi."""
    with ctx.workprec():
        return 2 * mpmath.sqrt(3) / mpmath.pi


def legendre_symbol(n: int, p: int) -> int:
    return int(gmpy2.legendre(n, p))


def _matmul(left: Matrix, right: Matrix) -> Matrix:
    (a, b), (c, d) = left
    (e, f), (g, h) = right
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def modular_action(gamma: Matrix, tau: TauPoint, ctx: PrecisionContext) -> Tuple[TauPoint, mpc]:
    """(a tau + b)/(c tau + d) and the automorphy factor c tau + d."""
    (a, b), (c, d) = gamma
    if a * d - b * c != 1:
        raise ParameterError(f"{gamma} is not in SL2(Z)")
    with ctx.workprec():
        factor = c * tau.tau + d
        return TauPoint((a * tau.tau + b) / factor), factor


def reduce_tau(tau: TauPoint, ctx: PrecisionContext, max_steps: int = 1000) -> Tuple[TauPoint, Matrix]:
    """Move tau into the closure of the standard fundamental domain."""
    tolerance = ctx.cut_tolerance
    transform = IDENTITY
    with ctx.workprec():
        z = tau.tau
        for _ in range(max_steps):
            shift = int(mpmath.floor(z.real + mpf(1) / 2))
            if shift:
                z = z - shift
                transform = _matmul(((1, -shift), (0, 1)), transform)
            if abs(z) < 1 - tolerance:
                z = -1 / z
                transform = _matmul(((0, -1), (1, 0)), transform)
                continue
            return TauPoint(z), transform
    raise DivergenceError(f"reduction of tau = {tau} did not finish in {max_steps} steps")


def weight_check(gamma: Matrix, tau: TauPoint, ctx: PrecisionContext) -> Dict[str, mpf]:
    """Relative residuals of E4, E6 and J under tau -> gamma tau."""
    moved, factor = modular_action(gamma, tau, ctx)
    e4, e4_moved = eisenstein(4, tau, ctx), eisenstein(4, moved, ctx)
    e6, e6_moved = eisenstein(6, tau, ctx), eisenstein(6, moved, ctx)
    j, j_moved = klein_J(tau, ctx), klein_J(moved, ctx)
    with ctx.workprec():
        return {
            "E4": abs(e4_moved - factor ** 4 * e4) / abs(factor ** 4 * e4),
            "E6": abs(e6_moved - factor ** 6 * e6) / abs(factor ** 6 * e6),
            "J": abs(j_moved - j) / max(abs(j), 1),
        }


def tau_from_J(target, tau_guess: TauPoint, ctx: PrecisionContext, max_steps: int = 60) -> TauPoint:
    """Newton's method for J(tau) = target starting near tau_guess."""
    with ctx.workprec():
        target = to_ap(target)
        limit = ctx.tolerance * 16
    tau = tau_guess
    for _ in range(max_steps):
        value = klein_J(tau, ctx)
        slope = dJ_dtau(tau, ctx)
        with ctx.workprec():
            step = (value - target) / slope
            tau = TauPoint(tau.tau - step)
            if abs(step) <= limit * abs(tau.tau):
                return tau
    raise DivergenceError(f"Newton inversion of J did not converge near tau = {tau_guess}")


def in_fundamental_domain(tau: TauPoint, ctx: PrecisionContext) -> Verdict:
    """Closure of {|Re tau| < 1/2, |tau| > 1}; boundary points count as inside."""
    slack = ctx.cut_tolerance
    with ctx.workprec():
        if abs(tau.real) > mpf(1) / 2 + slack or abs(tau.tau) < 1 - slack:
            return Verdict.OUT
    return Verdict.IN


def _compare_with_one(value, slack) -> Verdict:
    if abs(value - 1) <= slack:
        return Verdict.BOUNDARY
    return Verdict.IN if value < 1 else Verdict.OUT


def region_ratio(tau: TauPoint, region: RegionId, ctx: PrecisionContext) -> Optional[mpf]:
    """|1/J|, |(J-1)/J| or |J/(J-1)|; None where the ratio is infinite."""
    j = klein_J(tau, ctx)
    j_minus_one = klein_J_minus_one(tau, ctx)
    with ctx.workprec():
        numerator, denominator = {
            RegionId.C_INF: (mpf(1), j),
            RegionId.C_ONE: (j_minus_one, j),
            RegionId.C_ZERO: (j, j_minus_one),
        }[region]
        if abs(denominator) <= ctx.cut_tolerance * max(abs(numerator), 1):
            return None
        return abs(numerator / denominator)


def domain_member(tau: TauPoint, region: RegionId, ctx: PrecisionContext) -> Verdict:
    region = RegionId(region)
    if in_fundamental_domain(tau, ctx) is Verdict.OUT:
        return Verdict.OUT
    ratio = region_ratio(tau, region, ctx)
    if ratio is None:
        return Verdict.OUT
    verdict = _compare_with_one(ratio, ctx.cut_tolerance)
    if region is RegionId.C_ZERO and verdict is not Verdict.OUT:
        if abs(tau.real) <= ctx.cut_tolerance:
            return Verdict.BOUNDARY
        if tau.real > 0:
            return Verdict.OUT
    return verdict


class QExpansion:
    """Truncated q-expansion with exact integer coefficients."""

    def __init__(self, coefficients, order: Optional[int] = None):
        coefficients = [int(c) for c in coefficients]
        if order is None:
            order = len(coefficients) - 1
        coefficients = coefficients[: order + 1]
        coefficients += [0] * (order + 1 - len(coefficients))
        self.coefficients = coefficients
        self.order = order

    def __repr__(self):
        return f"QExpansion(order={self.order}, coefficients={self.coefficients[:5]}...)"

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        order = min(self.order, other.order)
        return self.coefficients[: order + 1] == other.coefficients[: order + 1]

    def __add__(self, other):
        order = min(self.order, other.order)
        return QExpansion([x + y for x, y in zip(self.coefficients[: order + 1], other.coefficients)], order)

    def __sub__(self, other):
        order = min(self.order, other.order)
        return QExpansion([x - y for x, y in zip(self.coefficients[: order + 1], other.coefficients)], order)

    def __mul__(self, other):
        if isinstance(other, int):
            return QExpansion([other * c for c in self.coefficients], self.order)
        order = min(self.order, other.order)
        product = [0] * (order + 1)
        for i, x in enumerate(self.coefficients[: order + 1]):
            if x == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] += x * other.coefficients[j]
        return QExpansion(product, order)

    __rmul__ = __mul__

    def theta(self) -> "QExpansion":
        """q d/dq."""
        return QExpansion([n * c for n, c in enumerate(self.coefficients)], self.order)

    @classmethod
    def eisenstein(cls, k: int, order: int) -> "QExpansion":
        constants = {2: -24, 4: 240, 6: -504}
        if k not in constants:
            raise ParameterError(f"weight must be 2, 4 or 6, got {k}")
        sigma = divisor_sums(k - 1, order)
        return cls([1] + [constants[k] * s for s in sigma[1:]], order)


def divisor_sums(power: int, order: int) -> List[int]:
    """sigma_power(n) for 0 <= n <= order (sigma(0) = 0)."""
    sums = [0] * (order + 1)
    for d in range(1, order + 1):
        d_power = d ** power
        for multiple in range(d, order + 1, d):
            sums[multiple] += d_power
    return sums


def ramanujan_ode_qcheck(order: int) -> bool:
    """Ramanujan's system for E2, E4, E6, coefficient by coefficient up to q^order."""
    if order < 0:
        raise ParameterError("order must be nonnegative")
    e2 = QExpansion.eisenstein(2, order)
    e4 = QExpansion.eisenstein(4, order)
    e6 = QExpansion.eisenstein(6, order)
    checks = (
        (e2.theta() * 12, e2 * e2 - e4),
        (e4.theta() * 3, e2 * e4 - e6),
        (e6.theta() * 2, e2 * e6 - e4 * e4),
    )
    for lhs, rhs in checks:
        if lhs != rhs:
            logger.warning("Ramanujan's equations fail among the first %d q-coefficients", order + 1)
            return False
    return True
