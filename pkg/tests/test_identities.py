# Author: Victor
# Page name: test_identities.py
# Page purpose: Tests for the identity verifiers and the exact coefficient checks
# Date of creation: 2026-10-16
import mpmath
import pytest
from mpmath import mpf

from catalog import IdentityKind, catalog, catalog_ids, get_record, records_in_group
from errors import ParameterError, RegimeError, UnknownIdentityError
from identities import (
    VerificationReport,
    alpha_squared_one,
    alpha_squared_zero,
    chowla_selberg,
    coefficient_consistency,
    exact_table_J,
    infty_forms_residual,
    printed_hyp_rhs,
    series_square_check,
    theorem_one_lhs,
    thm_intermediate_one,
    thm_intermediate_zero,
    verify_all,
    verify_hyp_record,
    verify_id,
    verify_series_identity,
    verify_thm_infty,
    verify_thm_one,
    verify_thm_zero,
)
from kernel import make_context, relative_difference
from modular import HeegnerPoint

DIGITS = 60


@pytest.mark.parametrize("identity_id", catalog_ids())
def test_catalog_record_verifies(identity_id):
    report = verify_id(identity_id, make_context(DIGITS))
    assert report.id == identity_id
    assert report.digits == DIGITS
    assert report.passed, report.notes
    assert mpf(report.rel_diff) <= mpf(10) ** -(DIGITS - 10)


def test_unknown_id():
    with pytest.raises(UnknownIdentityError):
        verify_id("series.sqrt-9", make_context(20))


def test_report_json_uses_pass_key():
    report = verify_id("table.J.sqrt-2", make_context(30))
    data = report.to_json_dict()
    assert data["pass"] is True
    assert "passed" not in data
    assert data["tau"] == {"a": 1, "b": 0, "c": 2, "d": 8}
    assert VerificationReport.model_validate(data) == report


@pytest.mark.parametrize("rec", catalog(), ids=lambda rec: rec.id)
def test_coefficient_consistency(rec):
    result = coefficient_consistency(rec)
    if rec.id in ("series.sqrt-7", "zero.halfint-43"):
        assert not result['valid']
        assert result['errors']
    else:
        assert result == {'valid': True, 'errors': []}


@pytest.mark.parametrize("rec", records_in_group("series"), ids=lambda rec: rec.id)
def test_series_square_check(rec):
    assert series_square_check(rec)


def test_printed_sqrt7_base_fails():
    rec = get_record("series.sqrt-7")
    assert not series_square_check(rec, printed=True)
    report = verify_series_identity(rec, make_context(40), printed=True)
    assert not report.passed
    assert any("as printed" in note for note in report.notes)
    corrected = verify_series_identity(rec, make_context(40))
    assert corrected.passed
    assert any("corrected" in note for note in corrected.notes)


def test_printed_h43_argument_is_on_the_branch_point():
    rec = get_record("zero.halfint-43")
    with pytest.raises(RegimeError):
        printed_hyp_rhs(rec.hyp, make_context(30), printed=True)


def test_minus_sign_of_sqrt_minus_four_is_confirmed():
    report = verify_hyp_record(get_record("one.sqrt-4"), make_context(DIGITS))
    assert report.passed
    assert "leading minus sign confirmed under principal branches" in report.notes


def test_wrong_record_kinds_are_refused():
    ctx = make_context(20)
    with pytest.raises(ParameterError):
        verify_series_identity(get_record("one.sqrt-2"), ctx)
    with pytest.raises(ParameterError):
        verify_hyp_record(get_record("series.sqrt-2"), ctx)
    with pytest.raises(ParameterError):
        exact_table_J(HeegnerPoint(2, 1, 3))
    with pytest.raises(ParameterError):
        theorem_one_lhs(HeegnerPoint.sqrt_minus(2), ctx, form="other")


@pytest.mark.parametrize("n", [2, 3, 7])
def test_theorem_infty(n):
    assert verify_thm_infty(HeegnerPoint.sqrt_minus(n), make_context(DIGITS)).passed


def test_series_and_derivative_forms_agree():
    ctx = make_context(DIGITS)
    residual = infty_forms_residual(get_record("series.halfint-19"), ctx)
    with ctx.workprec():
        assert residual < ctx.verification_threshold


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_theorem_one_and_printed_sign(n):
    report = verify_thm_one(HeegnerPoint.sqrt_minus(n), make_context(DIGITS))
    assert report.passed
    assert report.id == f"thm.one.sqrt-{n}"
    # J > 1 at every sqrt point in the table, so sqrt(1 - J) flips the sign
    assert any("opposite sign" in note for note in report.notes)


@pytest.mark.parametrize("n", [7, 11, 43, 163])
def test_theorem_zero(n):
    assert verify_thm_zero(HeegnerPoint.half_integer(n), make_context(DIGITS)).passed


def test_intermediate_forms():
    ctx = make_context(DIGITS)
    lhs, rhs = thm_intermediate_one(HeegnerPoint.sqrt_minus(2), ctx)
    with ctx.workprec():
        assert relative_difference(lhs, rhs) < ctx.verification_threshold
    lhs, rhs = thm_intermediate_zero(HeegnerPoint.half_integer(7), ctx)
    with ctx.workprec():
        assert relative_difference(lhs, rhs) < ctx.verification_threshold


def test_alpha_squared_closed_forms():
    ctx = make_context(DIGITS)
    one = alpha_squared_one(ctx)
    zero = alpha_squared_zero(ctx)
    with ctx.workprec():
        oracle = -mpmath.gamma(mpf(1) / 4) ** 4 / (4 * mpmath.pi ** 3)
        assert relative_difference(one, oracle) < ctx.verification_threshold
        assert zero.real < 0


def test_chowla_selberg_second_form_in_notes():
    report = chowla_selberg(7, make_context(DIGITS))
    assert report.passed
    assert report.notes[0].startswith("eta((-1 + sqrt(-7))/2) form")


def test_verify_all_orders_by_id():
    records = [get_record("table.s2.halfint-7"), get_record("eta.i"), get_record("cs.p3")]
    reports = verify_all(make_context(30), threads=1, records=records)
    assert [report.id for report in reports] == ["cs.p3", "eta.i", "table.s2.halfint-7"]
    assert all(report.passed for report in reports)


def test_verify_all_in_parallel_matches_sequential():
    records = records_in_group("table.J")[:4]
    ctx = make_context(30)
    sequential = verify_all(ctx, threads=1, records=records)
    parallel = verify_all(ctx, threads=2, records=records)
    assert [r.model_dump() for r in parallel] == [r.model_dump() for r in sequential]


@pytest.mark.slow
@pytest.mark.parametrize("rec", records_in_group("series"), ids=lambda rec: rec.id)
def test_series_identities_at_1000_digits(rec):
    report = verify_series_identity(rec, make_context(1000))
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize("rec", [rec for rec in catalog()
                                 if rec.kind in (IdentityKind.HYP_ONE, IdentityKind.HYP_ZERO,
                                                 IdentityKind.CHOWLA_SELBERG)],
                         ids=lambda rec: rec.id)
def test_hypergeometric_and_gamma_identities_at_300_digits(rec):
    assert verify_id(rec.id, make_context(300)).passed
