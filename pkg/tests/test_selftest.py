# Author: Victor
# Page name: test_selftest.py
# Page purpose: Tests for the self-test suites, including a deliberately corrupted record
# Date of creation: 2026-10-16
from dataclasses import replace
from fractions import Fraction

import pytest

from catalog import IdentityKind, get_record
from kernel import make_context
from selftest import (
    coefficient_suite,
    derivative_series_suite,
    exact_suite,
    hypergeometric_suite,
    kernel_suite,
    period_equations_suite,
    pi_suite,
    printed_typo_suite,
    report_suite,
    run_selftest,
    run_suite,
    special_values_suite,
)


def _corrupted(identity_id="series.sqrt-2"):
    rec = get_record(identity_id)
    return replace(rec, series=replace(rec.series, offset=rec.series.offset + Fraction(1, 1000)))


def test_exact_suite_passes():
    passed, detail = exact_suite(instances=5, seed=3)
    assert passed, detail


def test_kernel_suite_passes():
    passed, detail = kernel_suite(make_context(40), count=20)
    assert passed, detail
    assert detail == "20 rationals, 20 roots"


def test_hypergeometric_suite_passes():
    passed, detail = hypergeometric_suite(make_context(40))
    assert passed, detail


def test_special_values_suite_passes():
    passed, detail = special_values_suite(make_context(100))
    assert passed, detail


def test_period_equations_suite_passes():
    passed, detail = period_equations_suite(make_context(40))
    assert passed, detail
    assert detail == "phase, differential relation at 30 points"


def test_unexpected_exception_is_a_failed_suite():
    result = run_suite("broken", lambda: 1 / 0)
    assert not result.passed
    assert result.detail.startswith("unexpected ZeroDivisionError")


def test_corrupted_offset_fails_the_catalog_suite():
    passed, detail = report_suite(make_context(40), (IdentityKind.SERIES_INFTY,), [_corrupted()], threads=1)
    assert not passed
    assert detail == "failed: series.sqrt-2"


def test_corrupted_offset_fails_the_coefficient_suite():
    passed, detail = coefficient_suite([_corrupted(), get_record("series.sqrt-3")])
    assert not passed
    assert detail.startswith("series.sqrt-2: A = ")


def test_known_typos_do_not_fail_coefficients():
    passed, _ = coefficient_suite([get_record("series.sqrt-7"), get_record("zero.halfint-43")])
    assert passed


def test_report_suite_passes_on_clean_records():
    records = [get_record("series.sqrt-3"), get_record("table.J.halfint-11")]
    passed, detail = report_suite(make_context(40), tuple(IdentityKind), records, threads=1)
    assert passed
    assert detail == "2 records at 40 digits"


def test_printed_typo_suite():
    passed, _ = printed_typo_suite(make_context(40), [get_record("series.sqrt-7")])
    assert passed


def test_derivative_series_suite():
    passed, detail = derivative_series_suite(make_context(40), [get_record("series.sqrt-2"),
                                                                get_record("series.halfint-7")])
    assert passed, detail


def test_pi_suite():
    passed, detail = pi_suite(300, 200)
    assert passed
    assert detail == "pi agrees on 200 digits"


def test_unknown_level():
    with pytest.raises(ValueError):
        run_selftest("medium")


@pytest.mark.slow
def test_quick_level_with_corrupted_record_names_it():
    results = {result.name: result for result in run_selftest("quick", records=[_corrupted()], threads=1)}
    assert not results["catalog"].passed
    assert "series.sqrt-2" in results["catalog"].detail
    assert results["exact"].passed
    assert results["pi"].passed


@pytest.mark.slow
def test_quick_level_passes():
    results = run_selftest("quick", threads=1)
    assert all(result.passed for result in results), [r for r in results if not r.passed]
