# Author: Victor
# Page name: test_hypergeom.py
# Page purpose: Tests for Pochhammer symbols, regimes, 2F1/3F2 values and Kummer's solutions
# Date of creation: 2026-10-16
from fractions import Fraction

import mpmath
import pytest
from mpmath import mpc, mpf

from errors import DivergenceError, ParameterError, RegimeError
from hypergeom import (
    INF_PARAMS,
    ODE_SAMPLE_POINTS,
    ONE_PARAMS,
    ZERO_PARAMS,
    Hyp32Params,
    HypParams,
    HypRegime,
    choose_regime,
    evaluate_2f1,
    gauss_2f1,
    gauss_2f1_d2z,
    gauss_2f1_dz,
    gauss_connection_at_1,
    gen_3f2,
    hyp_ode_residual,
    kummer_local_solutions,
    pochhammer,
    ratio_supremum,
    sextuple_identity,
)
from kernel import make_context


def _close(value, oracle, ctx, factor=64):
    with ctx.workprec():
        return abs(value - oracle) <= ctx.tolerance * factor * max(1, abs(oracle))


def test_pochhammer_values():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(-2, 3) == 0
    with pytest.raises(ParameterError):
        pochhammer(1, -1)


def test_sextuple_identity():
    for n in range(51):
        lhs, rhs = sextuple_identity(n)
        assert lhs == rhs, n


def test_nonpositive_integer_c_rejected():
    with pytest.raises(ParameterError):
        HypParams(Fraction(1, 2), Fraction(1, 3), 0)
    with pytest.raises(ParameterError):
        Hyp32Params(1, 1, 1, Fraction(1, 2), -2)


def test_balanced_params():
    assert ONE_PARAMS.balanced
    assert ZERO_PARAMS.balanced
    assert not INF_PARAMS.balanced
    assert ONE_PARAMS.logarithmic_at_1


def test_regime_choice():
    assert choose_regime(INF_PARAMS, mpf("0.5")) is HypRegime.DIRECT
    assert choose_regime(ONE_PARAMS, mpf("0.9")) is HypRegime.CONNECTION
    assert choose_regime(ZERO_PARAMS, mpc("0.7", "0.4")) is HypRegime.CONNECTION
    with pytest.raises(RegimeError):
        choose_regime(INF_PARAMS, mpf("0.9"))


def test_regime_rejects_branch_cut():
    with pytest.raises(RegimeError):
        choose_regime(ONE_PARAMS, mpf(1))
    with pytest.raises(RegimeError):
        choose_regime(ZERO_PARAMS, mpf("1.1"))


def test_ratio_supremum():
    upper = (Fraction(1, 12), Fraction(5, 12))
    lower = (Fraction(1),)
    assert ratio_supremum(upper, lower, 0) == 1
    assert ratio_supremum((Fraction(1),), (Fraction(-3, 2),), 1) is None


@pytest.mark.parametrize("p", [INF_PARAMS, ONE_PARAMS, ZERO_PARAMS])
@pytest.mark.parametrize("z", ["0.3", "-0.6", "0.1+0.5j"])
def test_direct_against_mpmath(p, z):
    ctx = make_context(50)
    with ctx.workprec():
        point = mpmath.mpmathify(z)
        oracle = mpmath.hyp2f1(p.a.numerator / mpf(p.a.denominator), p.b.numerator / mpf(p.b.denominator),
                               p.c.numerator / mpf(p.c.denominator), point)
    evaluation = evaluate_2f1(p, point, ctx)
    assert evaluation.regime is HypRegime.DIRECT
    assert _close(evaluation.value, oracle, ctx)


@pytest.mark.parametrize("p", [ONE_PARAMS, ZERO_PARAMS])
@pytest.mark.parametrize("z", ["0.9", "0.999", "1.2+0.1j", "0.8+0.3j"])
def test_connection_against_mpmath(p, z):
    ctx = make_context(50)
    with ctx.workprec():
        point = mpmath.mpmathify(z)
        args = [x.numerator / mpf(x.denominator) for x in (p.a, p.b, p.c)]
        oracle = mpmath.hyp2f1(*args, point)
        derivative = mpmath.diff(lambda t: mpmath.hyp2f1(*args, t), point)
    evaluation = evaluate_2f1(p, point, ctx)
    assert evaluation.regime is HypRegime.CONNECTION
    assert _close(evaluation.value, oracle, ctx, factor=1024)
    with ctx.workprec():
        assert abs(gauss_2f1_dz(p, point, ctx) - derivative) < mpf(10) ** -40 * max(1, abs(derivative))


def test_derivative_matches_shifted_parameters():
    ctx = make_context(40)
    z = mpf("0.4")
    first = gauss_2f1_dz(ONE_PARAMS, z, ctx)
    shifted = gauss_2f1(ONE_PARAMS.shifted(1), z, ctx)
    factor = ONE_PARAMS.a * ONE_PARAMS.b / ONE_PARAMS.c
    with ctx.workprec():
        assert _close(first, mpf(factor.numerator) / factor.denominator * shifted, ctx)


@pytest.mark.parametrize("p, z", [
    (INF_PARAMS, mpf("0.2")),
    (ONE_PARAMS, mpf("0.95")),
    (ZERO_PARAMS, mpc("0.7", "0.4")),
    (ZERO_PARAMS, mpf("-0.5")),
])
def test_ode_residual_small(p, z):
    ctx = make_context(60)
    residual = hyp_ode_residual(p, z, ctx)
    with ctx.workprec():
        assert residual < mpf(10) ** -50


def test_second_derivative_direct():
    ctx = make_context(40)
    z = mpf("0.3")
    value = gauss_2f1_d2z(INF_PARAMS, z, ctx)
    with ctx.workprec():
        oracle = mpmath.diff(lambda t: mpmath.hyp2f1(mpf(1) / 12, mpf(5) / 12, 1, t), z, 2)
        assert abs(value - oracle) < mpf(10) ** -30


def test_order_out_of_range():
    with pytest.raises(ParameterError):
        evaluate_2f1(INF_PARAMS, mpf("0.1"), make_context(20), order=3)


def test_3f2_against_mpmath():
    ctx = make_context(50)
    params = Hyp32Params(Fraction(1, 2), Fraction(1, 6), Fraction(5, 6), 1, 1)
    value = gen_3f2(params, mpf("0.5"), ctx)
    with ctx.workprec():
        oracle = mpmath.hyp3f2(mpf(1) / 2, mpf(1) / 6, mpf(5) / 6, 1, 1, mpf("0.5"))
    assert _close(value, oracle, ctx)


def test_3f2_outside_radius():
    params = Hyp32Params(Fraction(1, 2), Fraction(1, 6), Fraction(5, 6), 1, 1)
    with pytest.raises(RegimeError):
        gen_3f2(params, mpf("0.9"), make_context(20))


def test_terminating_series():
    ctx = make_context(30)
    # 2F1(-2, 1; 1; z) = (1 - z)^2
    value = gauss_2f1(HypParams(-2, 1, 1), mpf("0.5"), ctx)
    assert value == mpf("0.25")


def test_divergence_guard():
    ctx = make_context(20)
    with pytest.raises(DivergenceError):
        evaluate_2f1(INF_PARAMS, mpf("1.5"), ctx, regime=HypRegime.DIRECT)


def test_forced_connection_needs_balanced_parameters():
    with pytest.raises(RegimeError):
        evaluate_2f1(INF_PARAMS, mpf("0.5"), make_context(20), regime=HypRegime.CONNECTION)
    with pytest.raises(RegimeError):
        evaluate_2f1(ZERO_PARAMS, mpf(2), make_context(20), regime=HypRegime.CONNECTION)


@pytest.mark.parametrize("p", [ONE_PARAMS, ZERO_PARAMS])
@pytest.mark.parametrize("order", [0, 1, 2])
def test_regimes_agree_at_one_half(p, order):
    ctx = make_context(100)
    half = Fraction(1, 2)
    direct = evaluate_2f1(p, half, ctx, order, regime=HypRegime.DIRECT)
    connection = evaluate_2f1(p, half, ctx, order, regime=HypRegime.CONNECTION)
    assert direct.regime is HypRegime.DIRECT
    assert connection.regime is HypRegime.CONNECTION
    with ctx.workprec():
        assert abs(direct.value - connection.value) <= ctx.verification_threshold * abs(direct.value)


def test_connection_converges_fast_next_to_one():
    ctx = make_context(100)
    with ctx.workprec():
        z = 1 - mpf("6.6e-15")
    evaluation = evaluate_2f1(ZERO_PARAMS, z, ctx)
    assert evaluation.regime is HypRegime.CONNECTION
    assert evaluation.terms <= 25


@pytest.mark.parametrize("x", [Fraction(1, 10), Fraction(1, 3), Fraction(1, 2)])
def test_clausen_square(x):
    # 2F1(1/12, 5/12; 1; x)^2 = 3F2(1/6, 5/6, 1/2; 1, 1; x)
    ctx = make_context(100)
    square = gauss_2f1(INF_PARAMS, x, ctx)
    value = gen_3f2(Hyp32Params(Fraction(1, 6), Fraction(5, 6), Fraction(1, 2), 1, 1), x, ctx)
    with ctx.workprec():
        assert abs(square ** 2 - value) < ctx.verification_threshold


@pytest.mark.parametrize("p, z", [(p, z) for p, points in ODE_SAMPLE_POINTS.items() for z in points])
def test_ode_residual_sweep(p, z):
    ctx = make_context(60)
    with ctx.workprec():
        point = mpmath.mpmathify(z)
        assert hyp_ode_residual(p, point, ctx) < mpf(10) ** -50


def test_kummer_pair_at_infinity_is_logarithmic_for_one_params():
    with pytest.raises(ParameterError):
        kummer_local_solutions(ONE_PARAMS, 1)
    first, second = kummer_local_solutions(ONE_PARAMS, "inf")
    assert first.z_exponent == -Fraction(1, 12)
    assert second.z_exponent == -Fraction(5, 12)


def _descriptor_oracle(solution):
    """mpmath rendition of a local solution descriptor."""
    args = [x.numerator / mpf(x.denominator) for x in (solution.params.a, solution.params.b, solution.params.c)]
    e0 = solution.z_exponent.numerator / mpf(solution.z_exponent.denominator)
    e1 = solution.one_minus_z_exponent.numerator / mpf(solution.one_minus_z_exponent.denominator)
    return lambda t: t ** e0 * (1 - t) ** e1 * mpmath.hyp2f1(*args, solution.mapped_argument(t))


@pytest.mark.parametrize("point, z", [(0, mpf("0.35")), (1, mpf("0.35")), ("inf", mpc(-2, 1))])
def test_kummer_solutions_solve_the_equation(point, z):
    p = HypParams(Fraction(1, 3), Fraction(1, 5), Fraction(1, 2))
    ctx = make_context(40)
    for solution in kummer_local_solutions(p, point):
        value = solution.evaluate(z, ctx)
        with ctx.workprec():
            oracle = _descriptor_oracle(solution)
            f0, f1, f2 = oracle(z), mpmath.diff(oracle, z), mpmath.diff(oracle, z, 2)
            residual = z * (1 - z) * f2 + (mpf(1) / 2 - (mpf(1) / 3 + mpf(1) / 5 + 1) * z) * f1 - f0 / 15
            assert abs(residual) < mpf(10) ** -25
            assert abs(value - f0) < mpf(10) ** -35


def test_gauss_connection_at_1_reproduces_direct_value():
    p = HypParams(Fraction(1, 3), Fraction(1, 5), Fraction(1, 2))
    ctx = make_context(40)
    z = mpf("0.3")
    rebuilt = gauss_connection_at_1(p, z, ctx)
    direct = gauss_2f1(p, z, ctx)
    assert _close(rebuilt, direct, ctx, factor=1024)


def test_argument_below_the_float_range():
    # J/(J - 1) at rho is a rounding-level number far below 1e-308
    ctx = make_context(100)
    with ctx.workprec():
        z = mpc(mpmath.ldexp(3, -1300), mpmath.ldexp(1, -1299))
    evaluation = evaluate_2f1(ZERO_PARAMS, z, ctx)
    assert evaluation.regime is HypRegime.DIRECT
    with ctx.workprec():
        assert abs(evaluation.value - 1) < ctx.verification_threshold


@pytest.mark.parametrize("p, z", [(INF_PARAMS, "0.6"), (ONE_PARAMS, "0.95"), (ZERO_PARAMS, "0.8+0.3j")])
def test_more_digits_only_refine_the_value(p, z):
    low, high = make_context(40), make_context(90)
    with high.workprec():
        point = mpmath.mpmathify(z)
    coarse, fine = gauss_2f1(p, point, low), gauss_2f1(p, point, high)
    with high.workprec():
        assert abs(fine - coarse) < low.tolerance * 64 * max(1, abs(fine))
