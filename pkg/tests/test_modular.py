# Author: Victor
# Page name: test_modular.py
# Page purpose: Tests for Eisenstein series, eta, Weber f, Klein J, s2 and the region tests
# Date of creation: 2026-10-16
import random
from fractions import Fraction

import gmpy2
import mpmath
import pytest
from mpmath import mpc, mpf

from catalog import HALF_INTEGER_J, SQRT_J
from errors import DomainError, ParameterError, PoleError, RegimeError
from kernel import make_context
from modular import (
    HeegnerPoint,
    QExpansion,
    RegionId,
    TauPoint,
    Verdict,
    dJ_dtau,
    dedekind_eta,
    discriminant_pair,
    divisor_sums,
    domain_member,
    e2_at_rho,
    eisenstein,
    in_fundamental_domain,
    klein_J,
    klein_J_minus_one,
    klein_j,
    legendre_symbol,
    modular_action,
    ramanujan_ode_qcheck,
    reduce_tau,
    s2,
    tau_from_J,
    weber_f,
    weight_check,
)


def _exact(value, ctx):
    with ctx.workprec():
        return mpf(value.numerator) / value.denominator


def test_tau_point_requires_upper_half_plane():
    with pytest.raises(DomainError):
        TauPoint(mpc(0, -1))


def test_heegner_point_labels():
    assert HeegnerPoint.sqrt_minus(7).label == "sqrt-7"
    assert HeegnerPoint.half_integer(163).label == "halfint-163"
    assert HeegnerPoint(2, 1, 3).label == "form-2-1-3"
    assert HeegnerPoint.parse("1,1,2") == HeegnerPoint.half_integer(7)
    assert HeegnerPoint.half_integer(7).d == 7


def test_heegner_point_rejects_bad_forms():
    with pytest.raises(ParameterError):
        HeegnerPoint(1, 2, 1)
    with pytest.raises(ParameterError):
        HeegnerPoint.half_integer(5)
    with pytest.raises(ParameterError):
        HeegnerPoint.parse("1,2")


def test_e2_at_i():
    ctx = make_context(60)
    value = eisenstein(2, TauPoint.sqrt_minus(1, ctx), ctx)
    with ctx.workprec():
        assert abs(value - 3 / mpmath.pi) < ctx.verification_threshold


def test_e2_at_rho():
    ctx = make_context(60)
    value = eisenstein(2, TauPoint.half_integer(3, ctx), ctx)
    with ctx.workprec():
        assert abs(value - e2_at_rho(ctx)) < ctx.verification_threshold


def test_e6_vanishes_at_i_and_e4_at_rho():
    ctx = make_context(100)
    with ctx.workprec():
        assert abs(eisenstein(6, TauPoint.sqrt_minus(1, ctx), ctx)) < ctx.verification_threshold
        assert abs(eisenstein(4, TauPoint.half_integer(3, ctx), ctx)) < ctx.verification_threshold


def test_eisenstein_weight_out_of_range():
    ctx = make_context(20)
    with pytest.raises(ParameterError):
        eisenstein(8, TauPoint.sqrt_minus(1, ctx), ctx)


def test_q_series_regime():
    ctx = make_context(20)
    low = TauPoint(mpc(0, "0.2"))
    with pytest.raises(RegimeError):
        eisenstein(4, low, ctx)
    with pytest.raises(RegimeError):
        dedekind_eta(low, ctx)
    with pytest.raises(RegimeError):
        weber_f(TauPoint(mpc(0, "0.5")), ctx)


def test_eta_at_i():
    ctx = make_context(80)
    value = dedekind_eta(TauPoint.sqrt_minus(1, ctx), ctx)
    with ctx.workprec():
        closed = mpmath.gamma(mpf(1) / 4) / (2 * mpmath.pi ** (mpf(3) / 4))
        assert abs(value - closed) < ctx.verification_threshold


def test_eta_against_mpmath_off_axis():
    ctx = make_context(40)
    tau = TauPoint(mpc("0.3", "0.8"))
    value = dedekind_eta(tau, ctx)
    with ctx.workprec():
        q = mpmath.expjpi(2 * tau.tau)
        oracle = mpmath.expjpi(tau.tau / 12) * mpmath.qp(q)
        assert abs(value - oracle) < ctx.verification_threshold


def test_weber_f_at_i():
    ctx = make_context(50)
    value = weber_f(TauPoint.sqrt_minus(1, ctx), ctx)
    with ctx.workprec():
        assert abs(value - mpmath.root(2, 4)) < ctx.verification_threshold


def test_discriminant_forms_agree():
    ctx = make_context(50)
    from_eta, from_eisenstein = discriminant_pair(TauPoint(mpc("0.1", "1.1")), ctx)
    with ctx.workprec():
        assert abs(from_eta - from_eisenstein) / abs(from_eta) < mpf(10) ** -40


@pytest.mark.parametrize("n", sorted(SQRT_J))
def test_table_J_sqrt_points(n):
    ctx = make_context(60)
    value = klein_J(TauPoint.sqrt_minus(n, ctx), ctx)
    exact = _exact(SQRT_J[n], ctx)
    with ctx.workprec():
        assert abs(value - exact) / abs(exact) < ctx.verification_threshold


@pytest.mark.parametrize("n", [7, 11, 19, 43, 67, 163])
def test_table_J_half_integer_points(n):
    ctx = make_context(60)
    value = klein_J(TauPoint.half_integer(n, ctx), ctx)
    exact = _exact(HALF_INTEGER_J[n], ctx)
    with ctx.workprec():
        assert abs(value - exact) / abs(exact) < ctx.verification_threshold


def test_j_163():
    ctx = make_context(40)
    value = klein_j(TauPoint.half_integer(163, ctx), ctx)
    with ctx.workprec():
        assert abs(value + mpf(640320) ** 3) < mpf(10) ** -20


def test_J_minus_one_near_i():
    ctx = make_context(40)
    tau = TauPoint(mpc(0, "1.0000001"))
    with ctx.workprec():
        difference = klein_J_minus_one(tau, ctx)
        assert abs(difference - (klein_J(tau, ctx) - 1)) < mpf(10) ** -30
        assert abs(difference) < mpf(10) ** -10


def test_s2_at_half_integer_7():
    ctx = make_context(100)
    value = s2(HeegnerPoint.parse("1,1,2").tau(ctx), ctx)
    with ctx.workprec():
        assert abs(value - mpf(5) / 21) < ctx.verification_threshold


def test_s2_pole_at_i():
    ctx = make_context(30)
    with pytest.raises(PoleError):
        s2(TauPoint.sqrt_minus(1, ctx), ctx)


def test_dJ_dtau_pole_at_rho():
    ctx = make_context(30)
    with pytest.raises(PoleError):
        dJ_dtau(TauPoint.half_integer(3, ctx), ctx)


def test_dJ_dtau_against_numerical_derivative():
    ctx = make_context(40)
    tau = TauPoint(mpc("0.2", "1.3"))
    value = dJ_dtau(tau, ctx)
    with ctx.workprec():
        h = mpf(10) ** -25
        forward = klein_J(TauPoint(tau.tau + h), ctx)
        backward = klein_J(TauPoint(tau.tau - h), ctx)
        central = (forward - backward) / (2 * h)
        assert abs(value - central) / abs(value) < mpf(10) ** -20


def test_weight_check_under_s():
    ctx = make_context(100)
    residuals = weight_check(((0, -1), (1, 0)), TauPoint(mpc("0.1", "1.2")), ctx)
    for name in ("E4", "E6", "J"):
        assert residuals[name] < ctx.verification_threshold


def _random_sl2(rng, tau, minimum_imag):
    """Random SL2(Z) matrix that keeps Im(gamma tau) >= minimum_imag."""
    while True:
        c, d = rng.randint(-3, 3), rng.randint(-3, 3)
        g, s, t = (int(x) for x in gmpy2.gcdext(c, d))
        if g != 1:
            continue
        k = rng.randint(-4, 4)
        a, b = t + k * c, -s + k * d
        if tau.imag / abs(c * tau.tau + d) ** 2 >= minimum_imag:
            return (a, b), (c, d)


def test_weight_check_under_random_sl2():
    rng = random.Random(20)
    ctx = make_context(100)
    for _ in range(20):
        with ctx.workprec():
            tau = TauPoint(mpc(mpf(rng.randint(-50, 50)) / 100, 1 + mpf(rng.randint(0, 100)) / 100))
        gamma = _random_sl2(rng, tau, mpf("0.3"))
        residuals = weight_check(gamma, tau, ctx)
        for name in ("E4", "E6", "J"):
            assert residuals[name] < ctx.verification_threshold, (gamma, name)


def test_modular_action_rejects_non_sl2():
    ctx = make_context(20)
    with pytest.raises(ParameterError):
        modular_action(((2, 0), (0, 1)), TauPoint.sqrt_minus(1, ctx), ctx)


def test_modular_action_runs_at_context_precision():
    ctx = make_context(100)
    with ctx.workprec():
        tau = TauPoint(mpc(mpf(1) / 3, mpf(7) / 5))
    moved, factor = modular_action(((0, -1), (1, 0)), tau, ctx)
    with ctx.workprec():
        assert abs(factor - tau.tau) == 0
        assert abs(moved.tau * tau.tau + 1) < ctx.verification_threshold


def test_reduce_tau():
    ctx = make_context(30)
    with ctx.workprec():
        start = TauPoint(mpc(3, "0.2"))
    reduced, transform = reduce_tau(start, ctx)
    moved, _ = modular_action(transform, start, ctx)
    with ctx.workprec():
        assert abs(reduced.tau - mpc(0, 5)) < mpf(10) ** -25
        assert in_fundamental_domain(reduced, ctx) is Verdict.IN
        assert abs(moved.tau - reduced.tau) < mpf(10) ** -25


def test_tau_from_J_recovers_point():
    ctx = make_context(40)
    target_tau = TauPoint(mpc(0, "1.3"))
    target = klein_J(target_tau, ctx)
    found = tau_from_J(target, TauPoint(mpc("0.02", "1.25")), ctx)
    with ctx.workprec():
        assert abs(found.tau - target_tau.tau) < mpf(10) ** -30


def test_domain_membership():
    ctx = make_context(40)
    with ctx.workprec():
        assert domain_member(TauPoint(mpc(0, 2)), RegionId.C_INF, ctx) is Verdict.IN
        assert domain_member(TauPoint.sqrt_minus(1, ctx), RegionId.C_INF, ctx) is Verdict.BOUNDARY
        assert domain_member(TauPoint.sqrt_minus(1, ctx), RegionId.C_ONE, ctx) is Verdict.IN
        assert domain_member(TauPoint.half_integer(3, ctx), RegionId.C_ZERO, ctx) is Verdict.IN
        assert domain_member(TauPoint.half_integer(3, ctx), RegionId.C_ONE, ctx) is Verdict.OUT
        assert domain_member(TauPoint(mpc("0.7", 1)), RegionId.C_INF, ctx) is Verdict.OUT


def test_c_zero_excludes_right_half():
    ctx = make_context(40)
    with ctx.workprec():
        left = TauPoint(mpc("-0.45", "0.95"))
        right = TauPoint(mpc("0.45", "0.95"))
        assert domain_member(left, RegionId.C_ZERO, ctx) is Verdict.IN
        assert domain_member(right, RegionId.C_ZERO, ctx) is Verdict.OUT


def test_legendre_symbol():
    assert legendre_symbol(2, 7) == 1
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(7, 7) == 0


def test_divisor_sums():
    assert divisor_sums(1, 6) == [0, 1, 3, 4, 7, 6, 12]
    assert divisor_sums(3, 2) == [0, 1, 9]


def test_q_expansion_arithmetic():
    e4 = QExpansion.eisenstein(4, 5)
    assert e4.coefficients == [1, 240, 2160, 6720, 17520, 30240]
    square = e4 * e4
    assert square[1] == 480
    assert (e4 - e4) == QExpansion([0] * 6)
    assert e4.theta()[2] == 2 * 2160
    with pytest.raises(ParameterError):
        QExpansion.eisenstein(3, 4)


def test_ramanujan_equations_hold_on_q_expansions():
    assert ramanujan_ode_qcheck(200)
    with pytest.raises(ParameterError):
        ramanujan_ode_qcheck(-1)


def test_exact_table_values_are_fractions():
    assert SQRT_J[2] == Fraction(125, 27)
    assert HALF_INTEGER_J[163] == Fraction(-(640320 ** 3), 1728)
