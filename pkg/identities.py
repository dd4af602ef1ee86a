# Author: Victor
# Page name: identities.py
# Page purpose: Verifiers for the three main theorems, the series identities, table values and Chowla-Selberg
# Date of creation: 2026-10-16
# Every verifier returns a VerificationReport with signed values on both sides. A report
# passes when rel_diff <= 10^-(digits - 10).
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mpc, mpf
from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from catalog import (
    HALF_INTEGER_J,
    HALF_INTEGER_S2,
    SQRT_J,
    SQRT_S2,
    ClosedFormConstant,
    HypDescriptor,
    IdentityKind,
    IdentityRecord,
    catalog,
    gamma_product,
    get_record,
)
from config import get_settings
from errors import ConsistencyError, DomainError, ParameterError
from fastseries import pi_value, sum_series
from hypergeom import INF_PARAMS, ONE_PARAMS, ZERO_PARAMS, gauss_2f1, gauss_2f1_dz
from kernel import PrecisionContext, ap_rational, gamma_ap, make_context, principal_power, principal_root, relative_difference
from modular import (
    HeegnerPoint,
    RegionId,
    TauPoint,
    Verdict,
    dedekind_eta,
    domain_member,
    eisenstein,
    klein_J,
    klein_J_minus_one,
    s2,
    weber_f,
)
from periods import region_alpha
from utils import render_number

logger = logging.getLogger(__name__)

# significant digits kept for abs_diff / rel_diff in reports
DIFF_DIGITS = 20


class TauForm(BaseModel):
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_point(cls, h: HeegnerPoint) -> "TauForm":
        return cls(a=h.a, b=h.b, c=h.c, d=h.d)


class VerificationReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    kind: str
    tau: Optional[TauForm] = None
    digits: int
    lhs: str
    rhs: str
    abs_diff: str
    rel_diff: str
    passed: bool = Field(alias="pass")
    notes: List[str] = Field(default_factory=list)

    @property
    def rel_diff_value(self) -> mpf:
        return mpf(self.rel_diff)

    def to_json_dict(self) -> dict:
        return self.model_dump(by_alias=True)


def _report(identity_id: str, kind: IdentityKind, h: Optional[HeegnerPoint], ctx: PrecisionContext, lhs, rhs,
            notes: Sequence[str] = (), extra_rel: Optional[mpf] = None) -> VerificationReport:
    with ctx.workprec():
        abs_diff = abs(lhs - rhs)
        rel_diff = relative_difference(lhs, rhs)
        if extra_rel is not None:
            rel_diff = max(rel_diff, extra_rel)
        passed = bool(rel_diff <= ctx.verification_threshold)
        report = VerificationReport(
            id=identity_id,
            kind=kind.value,
            tau=TauForm.from_point(h) if h is not None else None,
            digits=ctx.digits,
            lhs=render_number(lhs, ctx.digits, ctx.cut_tolerance),
            rhs=render_number(rhs, ctx.digits, ctx.cut_tolerance),
            abs_diff=render_number(abs_diff, DIFF_DIGITS),
            rel_diff=render_number(rel_diff, DIFF_DIGITS),
            passed=passed,
            notes=list(notes),
        )
    logger.info("%s: %s (rel_diff %s)", identity_id, "pass" if passed else "FAIL", report.rel_diff)
    return report


def eval_closed_form(cf: ClosedFormConstant, ctx: PrecisionContext):
    """Value of a closed form with kernel Gamma and binary-split pi."""
    pi = pi_value(ctx)
    gammas = [(gamma_ap(argument, ctx), exponent) for argument, exponent in cf.gammas]
    with ctx.workprec():
        value = ap_rational(cf.rational)
        for factor in cf.quadratic:
            value *= ap_rational(factor.rational) + ap_rational(factor.coefficient) * mpmath.sqrt(factor.radicand)
        for base, exponent in cf.surds:
            value *= principal_power(ap_rational(base), exponent, ctx)
        if cf.pi_exponent:
            value *= principal_power(pi, cf.pi_exponent, ctx)
        for gamma, exponent in gammas:
            value *= principal_power(gamma, exponent, ctx)
        if cf.phase:
            value = value * mpmath.expjpi(ap_rational(cf.phase))
        return value


def _require_region(tau: TauPoint, region: RegionId, ctx: PrecisionContext):
    verdict = domain_member(tau, region, ctx)
    if verdict is not Verdict.IN:
        raise DomainError(f"tau = {tau} is not inside {region.value} (verdict: {verdict.value})")


def _modular_data(h: HeegnerPoint, region: RegionId, ctx: PrecisionContext):
    tau = h.tau(ctx)
    _require_region(tau, region, ctx)
    return tau, klein_J(tau, ctx), klein_J_minus_one(tau, ctx), s2(tau, ctx)


def _rho_bar(ctx: PrecisionContext) -> mpc:
    with ctx.workprec():
        return mpc(mpf(-1) / 2, -mpmath.sqrt(3) / 2)


# J = infinity

def thm_infty_sides(h: HeegnerPoint, ctx: PrecisionContext) -> Tuple[mpc, mpc]:
    """a/(pi sqrt d) sqrt(J)/sqrt(J-1) and F^2 (1-s2)/6 - J d(F^2)/dJ with F = 2F1(1/12, 5/12; 1; 1/J)."""
    tau, J, J_minus_one, s = _modular_data(h, RegionId.C_INF, ctx)
    with ctx.workprec():
        u = 1 / J
    F = gauss_2f1(INF_PARAMS, u, ctx)
    F1 = gauss_2f1_dz(INF_PARAMS, u, ctx)
    pi = pi_value(ctx)
    with ctx.workprec():
        lhs = h.a / (pi * mpmath.sqrt(h.d)) * principal_root(J, 2, ctx) / principal_root(J_minus_one, 2, ctx)
        # d/dJ (1/J) = -1/J^2
        rhs = F ** 2 * (1 - s) / 6 + 2 * F * F1 / J
    return lhs, rhs


def verify_thm_infty(h: HeegnerPoint, ctx: PrecisionContext) -> VerificationReport:
    lhs, rhs = thm_infty_sides(h, ctx)
    return _report(f"thm.infty.{h.label}", IdentityKind.SERIES_INFTY, h, ctx, lhs, rhs)


def verify_series_identity(rec: IdentityRecord, ctx: PrecisionContext, printed: bool = False,
                           workers: int = 1) -> VerificationReport:
    """Closed-form lhs against the exactly split series; printed=True uses a printed base even when it is wrong."""
    if rec.kind is not IdentityKind.SERIES_INFTY:
        raise ParameterError(f"{rec.id} is not a series identity")
    lhs = eval_closed_form(rec.lhs, ctx)
    rhs = sum_series(rec.series.spec(printed), ctx, workers=workers)
    notes = list(rec.notes)
    if rec.series.printed_base is not None:
        used = rec.series.printed_base if printed else rec.series.base
        notes.append(f"evaluated with base {used} ({'as printed' if printed else 'corrected'})")
        logger.warning("%s: printed base %s differs from j; using %s", rec.id, rec.series.printed_base, used)
    return _report(rec.id, rec.kind, rec.heegner, ctx, lhs, rhs, notes)


def infty_forms_residual(rec: IdentityRecord, ctx: PrecisionContext) -> mpf:
    """|hypergeometric side - series side| relative, for a series record."""
    _, derivative_form = thm_infty_sides(rec.heegner, ctx)
    series_form = sum_series(rec.series.spec(), ctx)
    with ctx.workprec():
        return relative_difference(derivative_form, series_form)


# J = 1

def alpha_squared_one(ctx: PrecisionContext) -> mpc:
    """alpha^2 = (2i eta(i)^2)^2, checked against -Gamma(1/4)^4/(4 pi^3)."""
    alpha = region_alpha(RegionId.C_ONE, ctx)
    pi = pi_value(ctx)
    gamma = gamma_ap(Fraction(1, 4), ctx)
    with ctx.workprec():
        direct = alpha ** 2
        closed = -gamma ** 4 / (4 * pi ** 3)
        if relative_difference(direct, closed) > ctx.verification_threshold:
            raise ConsistencyError(f"alpha^2 from eta(i) = {direct} disagrees with the Gamma(1/4) closed form {closed}")
        return direct


def theorem_one_lhs(h: HeegnerPoint, ctx: PrecisionContext, form: str = "proof") -> mpc:
    """(tau+i)/(2 pi alpha^2 sqrt 3) R (a(tau+i)/sqrt(-d) - 1).

    R = i sqrt(J)/sqrt(J-1) in the proof form, sqrt(J)/sqrt(1-J) in the printed form.
    """
    if form not in ("proof", "printed"):
        raise ParameterError(f"form must be 'proof' or 'printed', got {form!r}")
    tau = h.tau(ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    alpha_sq = alpha_squared_one(ctx)
    pi = pi_value(ctx)
    with ctx.workprec():
        tau0 = tau.tau + mpc(0, 1)
        bracket = h.a * tau0 / principal_root(mpf(-h.d), 2, ctx) - 1
        if form == "proof":
            ratio = mpc(0, 1) * principal_root(J, 2, ctx) / principal_root(J_minus_one, 2, ctx)
        else:
            ratio = principal_root(J, 2, ctx) / principal_root(-J_minus_one, 2, ctx)
        return tau0 / (2 * pi * alpha_sq * mpmath.sqrt(3)) * ratio * bracket


def thm_one_rhs(h: HeegnerPoint, ctx: PrecisionContext):
    """F^2 (1-s2)/6 - J d(F^2)/dJ with F = 2F1(1/12, 5/12; 1/2; (J-1)/J)."""
    tau, J, J_minus_one, s = _modular_data(h, RegionId.C_ONE, ctx)
    with ctx.workprec():
        x = J_minus_one / J
    F = gauss_2f1(ONE_PARAMS, x, ctx)
    F1 = gauss_2f1_dz(ONE_PARAMS, x, ctx)
    with ctx.workprec():
        # d/dJ ((J-1)/J) = 1/J^2
        return F ** 2 * (1 - s) / 6 - 2 * F * F1 / J, F


def _printed_one_note(h: HeegnerPoint, rhs, ctx: PrecisionContext) -> Optional[str]:
    printed = theorem_one_lhs(h, ctx, form="printed")
    with ctx.workprec():
        if relative_difference(printed, rhs) <= ctx.verification_threshold:
            return None
        if relative_difference(-printed, rhs) <= ctx.verification_threshold:
            logger.warning("%s: statement with sqrt(1 - J) has the opposite sign under principal roots", h.label)
            return ("statement written with sqrt(J)/sqrt(1 - J) gives the opposite sign here; "
                    "i sqrt(J)/sqrt(J - 1) from the derivation matches")
        return "statement written with sqrt(J)/sqrt(1 - J) does not match"


def verify_thm_one(h: HeegnerPoint, ctx: PrecisionContext) -> VerificationReport:
    rhs, _ = thm_one_rhs(h, ctx)
    lhs = theorem_one_lhs(h, ctx)
    notes = ["alpha^2 from eta(i) agrees with -Gamma(1/4)^4/(4 pi^3)"]
    note = _printed_one_note(h, rhs, ctx)
    if note:
        notes.append(note)
    return _report(f"thm.one.{h.label}", IdentityKind.HYP_ONE, h, ctx, lhs, rhs, notes)


def thm_intermediate_one(h: HeegnerPoint, ctx: PrecisionContext) -> Tuple[mpc, mpc]:
    """(i/pi)[a(tau+i)^2/(2i alpha^2 sqrt(3d)) sqrt(J)/sqrt(J-1) - F^2/(tau+i) E4/E6] against the J = 1 rhs."""
    rhs, F = thm_one_rhs(h, ctx)
    tau = h.tau(ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    alpha_sq = alpha_squared_one(ctx)
    pi = pi_value(ctx)
    with ctx.workprec():
        tau0 = tau.tau + mpc(0, 1)
        roots = principal_root(J, 2, ctx) / principal_root(J_minus_one, 2, ctx)
        first = h.a * tau0 ** 2 / (mpc(0, 2) * alpha_sq * mpmath.sqrt(3 * h.d)) * roots
        lhs = mpc(0, 1) / pi * (first - F ** 2 / tau0 * e4 / e6)
    return lhs, rhs


# J = 0

def eta_rho_squared_closed(ctx: PrecisionContext) -> mpc:
    """3^(1/4) Gamma(1/3)^3/(4 pi^2 e^(pi i/12))."""
    pi = pi_value(ctx)
    gamma = gamma_ap(Fraction(1, 3), ctx)
    with ctx.workprec():
        return mpmath.root(3, 4) * gamma ** 3 / (4 * pi ** 2) * mpmath.expjpi(mpf(-1) / 12)


def alpha_squared_zero(ctx: PrecisionContext) -> mpc:
    """alpha^2 = (i sqrt 3 eta(rho)^2)^2 from eta(rho) and from the closed form; both must agree."""
    alpha = region_alpha(RegionId.C_ZERO, ctx)
    closed_eta = eta_rho_squared_closed(ctx)
    with ctx.workprec():
        direct = alpha ** 2
        closed = -3 * closed_eta ** 2
        if relative_difference(direct, closed) > ctx.verification_threshold:
            raise ConsistencyError(f"alpha^2 from eta(rho) = {direct} disagrees with the Gamma(1/3) closed form {closed}")
        return direct


def _cube_root_ratio(J, J_minus_one, ctx: PrecisionContext):
    """J^(1/3)/(1-J)^(1/3), principal roots."""
    return principal_power(J, Fraction(1, 3), ctx) / principal_power(-J_minus_one, Fraction(1, 3), ctx)


def thm_zero_sides(h: HeegnerPoint, ctx: PrecisionContext):
    """-(tau - conj rho)/(2 pi alpha^2 sqrt 3) J^(1/3)/(1-J)^(1/3) (a(tau - conj rho)/sqrt(-d) - 1)
    against F^2 [J/(6(1-J)) + s2/6] + J d(F^2)/dJ, F = 2F1(1/12, 7/12; 2/3; J/(J-1))."""
    tau, J, J_minus_one, s = _modular_data(h, RegionId.C_ZERO, ctx)
    with ctx.workprec():
        x = J / J_minus_one
    F = gauss_2f1(ZERO_PARAMS, x, ctx)
    F1 = gauss_2f1_dz(ZERO_PARAMS, x, ctx)
    alpha_sq = alpha_squared_zero(ctx)
    pi = pi_value(ctx)
    with ctx.workprec():
        tau0 = tau.tau - _rho_bar(ctx)
        bracket = h.a * tau0 / principal_root(mpf(-h.d), 2, ctx) - 1
        ratio = _cube_root_ratio(J, J_minus_one, ctx)
        lhs = -tau0 / (2 * pi * alpha_sq * mpmath.sqrt(3)) * ratio * bracket
        # d/dJ (J/(J-1)) = -1/(J-1)^2
        rhs = F ** 2 * (-J / (6 * J_minus_one) + s / 6) - 2 * J * F * F1 / J_minus_one ** 2
    return lhs, rhs, F


def verify_thm_zero(h: HeegnerPoint, ctx: PrecisionContext) -> VerificationReport:
    lhs, rhs, _ = thm_zero_sides(h, ctx)
    notes = ["alpha^2 from eta(rho) agrees with -3 (3^(1/4) Gamma(1/3)^3/(4 pi^2 e^(pi i/12)))^2"]
    return _report(f"thm.zero.{h.label}", IdentityKind.HYP_ZERO, h, ctx, lhs, rhs, notes)


def thm_intermediate_zero(h: HeegnerPoint, ctx: PrecisionContext) -> Tuple[mpc, mpc]:
    """(i/pi)[a(tau - conj rho)^2/(2 alpha^2 sqrt(3d)) J^(1/3)/(1-J)^(1/3) + F^2/(tau - conj rho) E4/E6]."""
    _, rhs, F = thm_zero_sides(h, ctx)
    tau = h.tau(ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    alpha_sq = alpha_squared_zero(ctx)
    pi = pi_value(ctx)
    with ctx.workprec():
        tau0 = tau.tau - _rho_bar(ctx)
        first = h.a * tau0 ** 2 / (2 * alpha_sq * mpmath.sqrt(3 * h.d)) * _cube_root_ratio(J, J_minus_one, ctx)
        lhs = mpc(0, 1) / pi * (first + F ** 2 / tau0 * e4 / e6)
    return lhs, rhs


# printed hypergeometric examples

def printed_hyp_rhs(desc: HypDescriptor, ctx: PrecisionContext, printed: bool = False):
    """k1 F(x)^2 + k2 F(x) F(a+1, b+1; c+1; y); y is the printed argument when printed=True."""
    product_argument = desc.argument
    if printed and desc.printed_product_argument is not None:
        product_argument = desc.printed_product_argument
    p = desc.params
    F = gauss_2f1(p, desc.argument, ctx)
    # F(a+1, b+1; c+1; y) = (c/(ab)) dF/dz(y)
    shifted = gauss_2f1_dz(p, product_argument, ctx)
    with ctx.workprec():
        shifted = shifted * ap_rational(p.c / (p.a * p.b))
        return ap_rational(desc.square_coefficient) * F ** 2 + ap_rational(desc.product_coefficient) * F * shifted


def verify_hyp_record(rec: IdentityRecord, ctx: PrecisionContext, printed: bool = False) -> VerificationReport:
    """Printed closed form against the printed 2F1 combination and against the theorem's left-hand side."""
    if rec.kind not in (IdentityKind.HYP_ONE, IdentityKind.HYP_ZERO):
        raise ParameterError(f"{rec.id} is not a hypergeometric identity")
    lhs = eval_closed_form(rec.lhs, ctx)
    rhs = printed_hyp_rhs(rec.hyp, ctx, printed)
    notes = list(rec.notes)
    if rec.kind is IdentityKind.HYP_ONE:
        theorem = theorem_one_lhs(rec.heegner, ctx)
        theorem_rhs, _ = thm_one_rhs(rec.heegner, ctx)
        note = _printed_one_note(rec.heegner, theorem_rhs, ctx)
        if note:
            notes.append(note)
    else:
        theorem, _, _ = thm_zero_sides(rec.heegner, ctx)
    with ctx.workprec():
        theorem_rel = relative_difference(theorem, lhs)
        if rec.lhs.rational < 0:
            verdict = "confirmed" if theorem_rel <= ctx.verification_threshold else "not confirmed"
            notes.append(f"leading minus sign {verdict} under principal branches")
    notes.append(f"theorem left-hand side vs closed form: rel_diff {render_number(theorem_rel, 5)}")
    if rec.hyp.printed_product_argument is not None and not printed:
        logger.warning("%s: using corrected argument %s instead of printed %s", rec.id, rec.hyp.argument,
                       rec.hyp.printed_product_argument)
    return _report(rec.id, rec.kind, rec.heegner, ctx, lhs, rhs, notes, extra_rel=theorem_rel)


# tables, eta values, Chowla-Selberg

def exact_table_J(h: HeegnerPoint) -> Fraction:
    if h.a == 1 and h.b == 0 and h.c in SQRT_J:
        return SQRT_J[h.c]
    if h.a == 1 and h.b == 1 and h.d in HALF_INTEGER_J:
        return HALF_INTEGER_J[h.d]
    raise ParameterError(f"no table J value for {h.label}")


def exact_table_s2(h: HeegnerPoint) -> Fraction:
    if h.a == 1 and h.b == 0 and h.c in SQRT_S2:
        return SQRT_S2[h.c]
    if h.a == 1 and h.b == 1 and h.d in HALF_INTEGER_S2:
        return HALF_INTEGER_S2[h.d]
    raise ParameterError(f"no table s2 value for {h.label}")


def verify_table_value(rec: IdentityRecord, ctx: PrecisionContext) -> VerificationReport:
    tau = rec.heegner.tau(ctx)
    computed = klein_J(tau, ctx) if rec.quantity == "J" else s2(tau, ctx)
    with ctx.workprec():
        exact = ap_rational(rec.value)
    return _report(rec.id, rec.kind, rec.heegner, ctx, computed, exact)


def verify_table_values(ctx: PrecisionContext) -> List[VerificationReport]:
    return [verify_table_value(rec, ctx) for rec in catalog() if rec.kind is IdentityKind.TABLE_VALUE]


def verify_eta_special(rec: IdentityRecord, ctx: PrecisionContext) -> VerificationReport:
    """eta(i) or eta(rho)^2 from the q-series against its Gamma closed form."""
    eta = dedekind_eta(rec.heegner.tau(ctx), ctx)
    closed = eval_closed_form(rec.lhs, ctx)
    with ctx.workprec():
        computed = eta if rec.quantity == "eta" else eta ** 2
    return _report(rec.id, rec.kind, rec.heegner, ctx, computed, closed)


def chowla_selberg(p: int, ctx: PrecisionContext) -> VerificationReport:
    """f(sqrt -p)^2 eta(sqrt -p)^2 sqrt(2 pi p) and eta((-1 + sqrt -p)/2)^2 e^(pi i/12) sqrt(2 pi p)
    against prod Gamma(n/p)^((w/4) chi(n))."""
    product = eval_closed_form(gamma_product(p), ctx)
    sqrt_point = TauPoint.sqrt_minus(p, ctx)
    half_point = TauPoint.half_integer(p, ctx)
    f = weber_f(sqrt_point, ctx)
    eta_sqrt = dedekind_eta(sqrt_point, ctx)
    eta_half = dedekind_eta(half_point, ctx)
    pi = pi_value(ctx)
    with ctx.workprec():
        root = mpmath.sqrt(2 * pi * p)
        weber_form = f ** 2 * eta_sqrt ** 2 * root
        eta_form = eta_half ** 2 * mpmath.expjpi(mpf(1) / 12) * root
        second_rel = relative_difference(eta_form, product)
    notes = [f"eta((-1 + sqrt(-{p}))/2) form: rel_diff {render_number(second_rel, 5)}"]
    return _report(f"cs.p{p}", IdentityKind.CHOWLA_SELBERG, HeegnerPoint.half_integer(p), ctx,
                   weber_form, product, notes, extra_rel=second_rel)


# exact checks

def coefficient_consistency(rec: IdentityRecord) -> Dict[str, object]:
    """Exact checks of printed coefficients and arguments against the table J and s2."""
    errors = []
    h = rec.heegner
    if rec.kind is IdentityKind.SERIES_INFTY:
        J = exact_table_J(h)
        if rec.series.offset != (1 - exact_table_s2(h)) / 6:
            errors.append(f"A = {rec.series.offset} is not (1 - s2)/6")
        if rec.series.j != 1728 * J:
            errors.append(f"sign * base = {rec.series.j} is not j = {1728 * J}")
        if rec.series.printed_base is not None and rec.series.sign * rec.series.printed_base != 1728 * J:
            errors.append(f"printed base {rec.series.printed_base} is not |j| = {abs(1728 * J)}")
    elif rec.kind is IdentityKind.HYP_ONE:
        J = exact_table_J(h)
        s = exact_table_s2(h)
        desc = rec.hyp
        if desc.square_coefficient != (1 - s) / 6:
            errors.append(f"F^2 coefficient {desc.square_coefficient} is not (1 - s2)/6")
        if desc.product_coefficient != -Fraction(5, 36) / J:
            errors.append(f"product coefficient {desc.product_coefficient} is not -5/(36 J)")
        if desc.argument != (J - 1) / J:
            errors.append(f"argument {desc.argument} is not (J - 1)/J")
    elif rec.kind is IdentityKind.HYP_ZERO:
        J = exact_table_J(h)
        s = exact_table_s2(h)
        desc = rec.hyp
        if desc.square_coefficient != J / (6 * (1 - J)) + s / 6:
            errors.append(f"F^2 coefficient {desc.square_coefficient} is not J/(6(1 - J)) + s2/6")
        if desc.product_coefficient != -Fraction(7, 48) * J / (J - 1) ** 2:
            errors.append(f"product coefficient {desc.product_coefficient} is not -(7/48) J/(J - 1)^2")
        if desc.argument != J / (J - 1):
            errors.append(f"argument {desc.argument} is not J/(J - 1)")
        if desc.printed_product_argument is not None and desc.printed_product_argument != desc.argument:
            errors.append(f"printed argument {desc.printed_product_argument} differs from {desc.argument}")
    return {
        'valid': len(errors) == 0,
        'errors': errors,
    }


def series_square_check(rec: IdentityRecord, printed: bool = False) -> bool:
    """(lhs pi)^2 == a^2 j/(d (j - 1728)) exactly, j = sign * base."""
    cf = rec.lhs
    if cf.quadratic or cf.gammas or cf.phase or cf.pi_exponent != -1:
        raise ParameterError(f"{rec.id} left-hand side is not rational * sqrt(.)/pi")
    square = cf.rational ** 2
    for base, exponent in cf.surds:
        if exponent != Fraction(1, 2):
            raise ParameterError(f"{rec.id} has a non-square-root surd")
        square *= base
    base = rec.series.printed_base if printed and rec.series.printed_base is not None else rec.series.base
    j = rec.series.sign * base
    h = rec.heegner
    return square == Fraction(h.a ** 2) * j / (h.d * (j - 1728))


# dispatch

def verify_record(rec: IdentityRecord, ctx: PrecisionContext) -> VerificationReport:
    if rec.kind is IdentityKind.SERIES_INFTY:
        return verify_series_identity(rec, ctx)
    if rec.kind in (IdentityKind.HYP_ONE, IdentityKind.HYP_ZERO):
        return verify_hyp_record(rec, ctx)
    if rec.kind is IdentityKind.TABLE_VALUE:
        return verify_table_value(rec, ctx)
    if rec.kind is IdentityKind.ETA_SPECIAL:
        return verify_eta_special(rec, ctx)
    return chowla_selberg(rec.prime, ctx)


def verify_id(identity_id: str, ctx: PrecisionContext) -> VerificationReport:
    return verify_record(get_record(identity_id), ctx)


def _verify_worker(args) -> VerificationReport:
    rec, digits, guard_bits = args
    return verify_record(rec, make_context(digits, guard_bits=guard_bits))


def verify_all(ctx: PrecisionContext, threads: Optional[int] = None,
               records: Optional[Sequence[IdentityRecord]] = None, progress: bool = False) -> List[VerificationReport]:
    """Verify records (the whole catalog by default), concurrently when threads > 1; ordered by id."""
    records = list(catalog() if records is None else records)
    if threads is None:
        threads = get_settings().threads
    if threads <= 1 or len(records) <= 1:
        reports = [verify_record(rec, ctx) for rec in tqdm(records, desc="verify", disable=not progress)]
    else:
        jobs = [(rec, ctx.digits, ctx.guard_bits) for rec in records]
        with ProcessPoolExecutor(max_workers=threads) as executor:
            reports = list(tqdm(executor.map(_verify_worker, jobs), total=len(jobs), desc="verify",
                                disable=not progress))
    return sorted(reports, key=lambda report: report.id)
