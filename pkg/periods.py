# Author: Victor
# Page name: periods.py
# Page purpose: Normalized periods and quasi-periods from the three hypergeometric representations
# Date of creation: 2026-10-16
# All period work happens on the curve with discriminant 1: omega~ = omega * Delta^(1/12) and
# eta~ = eta * Delta^(-1/12). The other families only appear through conversion helpers.
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

import mpmath
from mpmath import mpc, mpf

from errors import ConsistencyError, DerivativeSingularityError, DomainError, PoleError, PrecisionError
from hypergeom import INF_PARAMS, ONE_PARAMS, ZERO_PARAMS, gauss_2f1, gauss_2f1_dz
from kernel import PrecisionContext, principal_power, principal_root, to_ap
from modular import (
    HeegnerPoint,
    RegionId,
    TauPoint,
    Verdict,
    dJ_dtau,
    dedekind_eta,
    discriminant_tau,
    domain_member,
    eisenstein,
    klein_J,
    klein_J_minus_one,
    s2,
    tau_from_J,
)

logger = logging.getLogger(__name__)

REGION_ORDER = (RegionId.C_INF, RegionId.C_ONE, RegionId.C_ZERO)
# ten points strictly inside each region, away from J = 0, 1 and the region edges
SAMPLE_POINTS = {
    RegionId.C_INF: tuple((x, y) for y in ("1.3", "1.6") for x in ("-0.4", "-0.2", "0", "0.2", "0.4")),
    RegionId.C_ONE: tuple((x, y) for y in ("1.03", "1.08") for x in ("-0.08", "-0.04", "0.04", "0.08"))
    + (("0", "1.05"), ("0", "1.12")),
    RegionId.C_ZERO: (("-0.48", "0.93"), ("-0.45", "0.93"), ("-0.42", "0.93"), ("-0.48", "0.98"),
                      ("-0.45", "0.98"), ("-0.42", "0.98"), ("-0.38", "0.98"), ("-0.45", "1.03"),
                      ("-0.42", "1.03"), ("-0.38", "1.03")),
}


@dataclass(frozen=True)
class CurveInvariants:
    g2: mpc
    g3: mpc
    delta: mpc
    J: mpc
    j: mpc
    g: Optional[mpc]
    delta_J: Optional[mpc]


@dataclass(frozen=True)
class PeriodData:
    omega_tilde: mpc
    eta_tilde: Optional[mpc]
    region: RegionId
    tau: TauPoint


class RootIdentityResiduals(NamedTuple):
    lattice: mpf
    eisenstein: mpf


class CMSides(NamedTuple):
    lhs: mpc
    rhs: mpf
    residual: mpf
    region: RegionId
    used_rho_limit: bool


def _is_rho(tau: TauPoint, ctx: PrecisionContext) -> bool:
    with ctx.workprec():
        rho = mpc(-0.5, mpmath.sqrt(3) / 2)
        return abs(tau.tau - rho) <= ctx.cut_tolerance


def _tau_i(ctx: PrecisionContext) -> TauPoint:
    with ctx.workprec():
        return TauPoint(mpc(0, 1))


def _tau_rho(ctx: PrecisionContext) -> TauPoint:
    return TauPoint.half_integer(3, ctx)


def region_alpha(region: RegionId, ctx: PrecisionContext) -> mpc:
    """alpha = 2i eta(i)^2 for the J = 1 representation, i sqrt(3) eta(rho)^2 for J = 0."""
    if region is RegionId.C_ONE:
        eta = dedekind_eta(_tau_i(ctx), ctx)
        with ctx.workprec():
            return mpc(0, 2) * eta ** 2
    if region is RegionId.C_ZERO:
        eta = dedekind_eta(_tau_rho(ctx), ctx)
        with ctx.workprec():
            return mpc(0, 1) * mpmath.sqrt(3) * eta ** 2
    raise DomainError("the J = infinity representation has no alpha constant")


def _anchor(region: RegionId, ctx: PrecisionContext) -> mpc:
    """tau_0 = tau - anchor: -i for the J = 1 case, conj(rho) for J = 0."""
    with ctx.workprec():
        if region is RegionId.C_ONE:
            return mpc(0, -1)
        return mpc(-0.5, -mpmath.sqrt(3) / 2)


def _representation(region: RegionId, J, J_minus_one, tau: Optional[TauPoint], ctx: PrecisionContext,
                    J_prime=None, derivative: bool = False):
    """(omega~, d omega~/dJ) from the region's 2F1 formula; the derivative is None unless asked for."""
    d_omega = None
    if region is RegionId.C_INF:
        with ctx.workprec():
            u = 1 / J
        F = gauss_2f1(INF_PARAMS, u, ctx)
        F1 = gauss_2f1_dz(INF_PARAMS, u, ctx) if derivative else None
        with ctx.workprec():
            constant = 2 * mpmath.pi / mpmath.root(12, 4)
            root = principal_power(J, Fraction(-1, 12), ctx)
            omega = constant * root * F
            if derivative:
                d_omega = constant * (-(root / (12 * J)) * F - root * F1 / J ** 2)
        return omega, d_omega

    alpha = region_alpha(region, ctx)
    with ctx.workprec():
        tau0 = tau.tau - _anchor(region, ctx)
        if region is RegionId.C_ONE:
            x = J_minus_one / J
        else:
            x = J / J_minus_one
    params = ONE_PARAMS if region is RegionId.C_ONE else ZERO_PARAMS
    F = gauss_2f1(params, x, ctx)
    F1 = gauss_2f1_dz(params, x, ctx) if derivative else None
    with ctx.workprec():
        if region is RegionId.C_ONE:
            prefactor = 2 * mpmath.pi * alpha / tau0 * principal_power(J, Fraction(-1, 12), ctx)
        else:
            prefactor = 2 * mpmath.pi * alpha / tau0 * principal_power(-J_minus_one, Fraction(-1, 12), ctx)
        omega = prefactor * F
        if derivative:
            # d tau/dJ = 1/J'
            if region is RegionId.C_ONE:
                d_omega = omega * (-1 / (tau0 * J_prime) - 1 / (12 * J)) + prefactor * F1 / J ** 2
            else:
                d_omega = (omega * (-1 / (tau0 * J_prime) - 1 / (12 * J_minus_one))
                           - prefactor * F1 / J_minus_one ** 2)
    return omega, d_omega


def _require_member(region: RegionId, tau: TauPoint, ctx: PrecisionContext):
    verdict = domain_member(tau, region, ctx)
    if verdict is not Verdict.IN:
        raise DomainError(f"tau = {tau} is not inside {region.value} (verdict: {verdict.value})")


def period_tilde(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpc:
    region = RegionId(region)
    _require_member(region, tau, ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    omega, _ = _representation(region, J, J_minus_one, tau, ctx)
    return omega


def _j_prime(tau: TauPoint, ctx: PrecisionContext):
    try:
        J_prime = dJ_dtau(tau, ctx)
    except PoleError as exc:
        raise DerivativeSingularityError(f"dJ/dtau cannot be inverted at tau = {tau}") from exc
    with ctx.workprec():
        if abs(J_prime) <= ctx.cut_tolerance:
            raise DerivativeSingularityError(f"dJ/dtau vanishes at tau = {tau}")
    return J_prime


def period_derivative(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> Tuple[mpc, mpc]:
    """(omega~, d omega~/dJ) analytically, with d tau/dJ from the modular derivative."""
    region = RegionId(region)
    _require_member(region, tau, ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    with ctx.workprec():
        if abs(J) <= ctx.cut_tolerance or abs(J_minus_one) <= ctx.cut_tolerance:
            raise PoleError(f"J = {mpmath.nstr(J, 10)} is 0 or 1; the quasi-period formula degenerates")
    J_prime = None if region is RegionId.C_INF else _j_prime(tau, ctx)
    return _representation(region, J, J_minus_one, tau, ctx, J_prime=J_prime, derivative=True)


def _quasi_factor(J, J_minus_one, ctx: PrecisionContext):
    """-2 sqrt(3) J^(2/3) sqrt(J - 1)."""
    with ctx.workprec():
        return -2 * mpmath.sqrt(3) * principal_power(J, Fraction(2, 3), ctx) * principal_root(J_minus_one, 2, ctx)


def quasi_period_tilde(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpc:
    _, d_omega = period_derivative(region, tau, ctx)
    factor = _quasi_factor(klein_J(tau, ctx), klein_J_minus_one(tau, ctx), ctx)
    with ctx.workprec():
        return factor * d_omega


def period_data(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> PeriodData:
    region = RegionId(region)
    omega, d_omega = period_derivative(region, tau, ctx)
    factor = _quasi_factor(klein_J(tau, ctx), klein_J_minus_one(tau, ctx), ctx)
    with ctx.workprec():
        return PeriodData(omega_tilde=omega, eta_tilde=factor * d_omega, region=region, tau=tau)


def region_of(tau: TauPoint, ctx: PrecisionContext) -> RegionId:
    """First region (infinity, one, zero) that strictly contains tau."""
    for region in REGION_ORDER:
        if domain_member(tau, region, ctx) is Verdict.IN:
            return region
    raise DomainError(f"tau = {tau} lies in none of the three regions")


def omega_tilde_oracle(tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """2 pi eta(tau)^2, whose 12th power is Delta(tau)."""
    eta = dedekind_eta(tau, ctx)
    with ctx.workprec():
        return 2 * mpmath.pi * eta ** 2


def phase_against_oracle(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpc:
    """omega~ / (2 pi eta^2); exactly 1 when the principal branches line up."""
    omega = period_tilde(region, tau, ctx)
    oracle = omega_tilde_oracle(tau, ctx)
    with ctx.workprec():
        return omega / oracle


def twelfth_power_residual(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpf:
    omega = period_tilde(region, tau, ctx)
    delta = discriminant_tau(tau, ctx)
    with ctx.workprec():
        return abs(omega ** 12 - delta) / abs(delta)


def invariants_from_tau(tau: TauPoint, ctx: PrecisionContext) -> CurveInvariants:
    """g2(tau), g3(tau), Delta(tau), J, j and the E_J data."""
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    delta = discriminant_tau(tau, ctx)
    J_modular = klein_J(tau, ctx)
    with ctx.workprec():
        pi = mpmath.pi
        g2 = 4 * pi ** 4 * e4 / 3
        g3 = 8 * pi ** 6 * e6 / 27
        j = 1728 * g2 ** 3 / delta
        J = j / 1728
        if abs(J - J_modular) > ctx.cut_tolerance * max(abs(J), 1):
            raise ConsistencyError(f"J from g2, Delta and from the modular functions disagree at tau = {tau}")
        one_minus = 1 - J
        if abs(one_minus) <= ctx.cut_tolerance:
            g = delta_J = None
        else:
            g = 27 * J / one_minus
            delta_J = mpf(3) ** 9 * J ** 2 / (16 * one_minus ** 2)
    return CurveInvariants(g2=g2, g3=g3, delta=delta, J=J, j=j, g=g, delta_J=delta_J)


def _scaling_factor(J, J_minus_one, ctx: PrecisionContext):
    """J^(-1/6) 27^(-1/4) (J - 1)^(1/4), the root of (27/(J-1))^(-1/4) split into principal parts."""
    with ctx.workprec():
        return (principal_power(J, Fraction(-1, 6), ctx) / mpmath.root(27, 4)
                * principal_power(J_minus_one, Fraction(1, 4), ctx))


def family_scalings(J, omega_tilde, eta_tilde, ctx: PrecisionContext) -> Tuple[mpc, Optional[mpc]]:
    """(Omega, H) on E_J from (omega~, eta~)."""
    with ctx.workprec():
        J = to_ap(J)
        factor = _scaling_factor(J, J - 1, ctx)
        big_h = None if eta_tilde is None else eta_tilde / factor
        return omega_tilde * factor, big_h


def tilde_from_family(J, omega_family, eta_family, ctx: PrecisionContext) -> Tuple[mpc, Optional[mpc]]:
    """Inverse of family_scalings."""
    with ctx.workprec():
        J = to_ap(J)
        factor = _scaling_factor(J, J - 1, ctx)
        eta_tilde = None if eta_family is None else eta_family * factor
        return omega_family / factor, eta_tilde


def curve_family_table(omega1, eta1, invariants: CurveInvariants, ctx: PrecisionContext):
    """First period and quasi-period on E, E_tau, E~ and E_J for a curve E with the given invariants."""
    with ctx.workprec():
        delta_root = principal_root(invariants.delta, 12, ctx)
        ratio_root = principal_root(invariants.g3 / invariants.g2, 2, ctx)
        return {
            "E": (omega1, eta1),
            "E_tau": (mpf(1), eta1 * omega1),
            "E_tilde": (omega1 * delta_root, eta1 / delta_root),
            "E_J": (omega1 * ratio_root, eta1 / ratio_root),
        }


def period_tilde_from_J(region: RegionId, J, tau_guess: TauPoint, ctx: PrecisionContext) -> mpc:
    """omega~ as a function of J; tau is recovered by Newton where the formula needs it."""
    region = RegionId(region)
    with ctx.workprec():
        J = to_ap(J)
        J_minus_one = J - 1
    tau = None if region is RegionId.C_INF else tau_from_J(J, tau_guess, ctx)
    omega, _ = _representation(region, J, J_minus_one, tau, ctx)
    return omega


def _big_omega_from_J(region, J, tau_guess, ctx):
    omega = period_tilde_from_J(region, J, tau_guess, ctx)
    with ctx.workprec():
        return omega * _scaling_factor(J, J - 1, ctx)


def picard_fuchs_residual(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpf:
    """Normalized residual of Omega'' + Omega'/J + (31J - 4)/(144 J^2 (1-J)^2) Omega by central differences."""
    region = RegionId(region)
    _require_member(region, tau, ctx)
    J = klein_J(tau, ctx)
    with ctx.workprec():
        step = abs(J) * mpmath.ldexp(1, -(ctx.working_bits // 3))
        if step == 0 or step < abs(J) * mpmath.ldexp(1, -ctx.working_bits + 8):
            raise PrecisionError("finite-difference step underflows; use a lower target precision")
        J_plus, J_minus = J + step, J - step
    centre = _big_omega_from_J(region, J, tau, ctx)
    plus = _big_omega_from_J(region, J_plus, tau, ctx)
    minus = _big_omega_from_J(region, J_minus, tau, ctx)
    with ctx.workprec():
        first = (plus - minus) / (2 * step)
        second = (plus - 2 * centre + minus) / step ** 2
        potential = (31 * J - 4) / (144 * J ** 2 * (1 - J) ** 2)
        residual = second + first / J + potential * centre
        return abs(residual) / abs(centre / J ** 2)


def differential_relation_check(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpf:
    """Normalized residual of 36 J (J-1) dOmega/dJ = 3 (2 + J) Omega - 2 (J - 1) H."""
    region = RegionId(region)
    omega, d_omega = period_derivative(region, tau, ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    eta = _quasi_factor(J, J_minus_one, ctx)
    with ctx.workprec():
        eta = eta * d_omega
        factor = _scaling_factor(J, J_minus_one, ctx)
        big_omega = omega * factor
        big_h = eta / factor
        d_big_omega = d_omega * factor + big_omega * (-1 / (6 * J) + 1 / (4 * J_minus_one))
        parts = (
            36 * J * J_minus_one * d_big_omega,
            -3 * (2 + J) * big_omega,
            2 * J_minus_one * big_h,
        )
        return abs(sum(parts)) / sum(abs(p) for p in parts)


def e2_relation_residual(region: RegionId, tau: TauPoint, ctx: PrecisionContext) -> mpf:
    """|E2 - 3 omega~ eta~ / pi^2| / |E2|."""
    data = period_data(region, tau, ctx)
    e2 = eisenstein(2, tau, ctx)
    with ctx.workprec():
        return abs(e2 - 3 * data.omega_tilde * data.eta_tilde / mpmath.pi ** 2) / abs(e2)


def lemma_root_identity(tau: TauPoint, ctx: PrecisionContext) -> RootIdentityResiduals:
    """Relative residuals of the two principal-branch root identities at tau.

    lattice:    (3 g3 / 2 g2) sqrt(J)/sqrt(J-1) = (J Delta)^(1/6)/sqrt(12) with g2(tau), g3(tau), Delta(tau)
    eisenstein: E4/E6 = 2 pi^2/(9 omega~^2) J^(1/3) sqrt(27)/sqrt(J-1)
    """
    invariants = invariants_from_tau(tau, ctx)
    J = invariants.J
    J_minus_one = klein_J_minus_one(tau, ctx)
    with ctx.workprec():
        if abs(J) <= ctx.cut_tolerance or abs(J_minus_one) <= ctx.cut_tolerance:
            raise PoleError(f"J = {mpmath.nstr(J, 10)} is 0 or 1")
    omega = period_tilde(region_of(tau, ctx), tau, ctx)
    e4 = eisenstein(4, tau, ctx)
    e6 = eisenstein(6, tau, ctx)
    with ctx.workprec():
        root_ratio = principal_root(J, 2, ctx) / principal_root(J_minus_one, 2, ctx)
        lhs = 3 * invariants.g3 / (2 * invariants.g2) * root_ratio
        rhs = principal_root(J * invariants.delta, 6, ctx) / mpmath.sqrt(12)
        lattice = abs(lhs - rhs) / abs(rhs)
        lhs = e4 / e6
        rhs = (2 * mpmath.pi ** 2 / (9 * omega ** 2) * principal_power(J, Fraction(1, 3), ctx)
               * mpmath.sqrt(27) / principal_root(J_minus_one, 2, ctx))
        return RootIdentityResiduals(lattice=lattice, eisenstein=abs(lhs - rhs) / abs(rhs))


def rho_limit_lhs(omega, e2, e6, tau: TauPoint, ctx: PrecisionContext):
    """Left side of the CM relation at rho from the limits of eta~ and the s2 term.

    Approaching rho inside C_zero, J ~ c (tau - rho)^3 with c = -8 pi^3 i E6(rho)/27, so
    J^(2/3)/J' tends to e^(i pi/6)/(2 pi E6(rho)^(1/3)) and sqrt(J - 1) to i. Neither limit uses E2.
    """
    with ctx.workprec():
        cube_root = principal_root(e6, 3, ctx)
        rotation = mpmath.expjpi(mpf(1) / 6)
        tau0 = tau.tau - _anchor(RegionId.C_ZERO, ctx)
        ratio_limit = rotation / (2 * mpmath.pi * cube_root)
        eta = -2 * mpmath.sqrt(3) * mpc(0, 1) * (-omega / tau0) * ratio_limit
        # 3 gamma3 E4 / (2 gamma2 E6) tends to e^(i pi/6)/(2 sqrt(3) E6^(1/3))
        s2_factor = rotation / (2 * mpmath.sqrt(3) * cube_root)
        gamma_term = omega * s2_factor * (e2 - 3 / (mpmath.pi * tau.imag))
        return omega / (2 * mpmath.pi) * (eta - gamma_term)


def cm_relation_sides(h: HeegnerPoint, ctx: PrecisionContext) -> CMSides:
    """(omega~/2 pi)[eta~ - omega~ (3 gamma3 / 2 gamma2) s2] next to a/sqrt(d)."""
    tau = h.tau(ctx)
    region = region_of(tau, ctx)
    with ctx.workprec():
        rhs = mpf(h.a) / mpmath.sqrt(h.d)
    if _is_rho(tau, ctx):
        omega = period_tilde(region, tau, ctx)
        lhs = rho_limit_lhs(omega, eisenstein(2, tau, ctx), eisenstein(6, tau, ctx), tau, ctx)
        with ctx.workprec():
            return CMSides(lhs, rhs, abs(lhs - rhs), region, True)
    data = period_data(region, tau, ctx)
    J = klein_J(tau, ctx)
    J_minus_one = klein_J_minus_one(tau, ctx)
    s2_value = s2(tau, ctx)
    with ctx.workprec():
        gamma2 = principal_power(J, Fraction(1, 3), ctx)
        gamma3 = principal_root(J_minus_one, 2, ctx) / mpmath.sqrt(27)
        omega = data.omega_tilde
        gamma_term = omega * (3 * gamma3 / (2 * gamma2)) * s2_value
        lhs = omega / (2 * mpmath.pi) * (data.eta_tilde - gamma_term)
        return CMSides(lhs, rhs, abs(lhs - rhs), region, False)


def cm_relation(h: HeegnerPoint, ctx: PrecisionContext) -> mpf:
    return cm_relation_sides(h, ctx).residual


def sample_taus(region: RegionId, ctx: PrecisionContext) -> List[TauPoint]:
    with ctx.workprec():
        return [TauPoint(mpc(x, y)) for x, y in SAMPLE_POINTS[RegionId(region)]]
