# Author: Victor
# Page name: test_utils.py
# Page purpose: Tests for number rendering, parsing and input validation helpers
# Date of creation: 2026-10-16
import mpmath
import pytest
from mpmath import mpc, mpf

from utils import (
    default_report_name,
    group_digits,
    parse_number,
    parse_tau_spec,
    render_number,
    sanitize_filename,
    validate_digits,
)


def test_render_real_and_complex():
    with mpmath.workdps(30):
        assert render_number(mpf(1) / 4, 5) == "0.25"
        assert render_number(mpc(1, -2), 5) == "1.0-2.0i"
        assert render_number(mpc("0.5", "0.25"), 5) == "0.5+0.25i"


def test_render_drops_rounding_imaginary_part():
    with mpmath.workdps(30):
        value = mpc(2, mpf("1e-40"))
        assert render_number(value, 10, tolerance=mpf("1e-30")) == "2.0"
        assert render_number(value, 10).endswith("i")


def test_parse_number_inverts_render():
    with mpmath.workdps(40):
        for value in (mpf("-1.25"), mpc("0.5", "-3.75"), mpc("1e-5", "2e10")):
            assert parse_number(render_number(value, 30)) == value
        assert parse_number("2i") == mpc(0, 2)
        assert parse_number("1.5e-3") == mpf("1.5e-3")


def test_group_digits():
    assert group_digits("3.14159265358979") == "3.1415926535 8979"
    assert group_digits("3.1415", block=2) == "3.14 15"
    assert group_digits("3") == "3"


@pytest.mark.parametrize("digits, valid", [(1, True), (100000, True), (0, False), (-5, False),
                                           (True, False), ("100", False), (10 ** 8, False)])
def test_validate_digits(digits, valid):
    result = validate_digits(digits)
    assert result['valid'] is valid
    assert bool(result['errors']) is not valid


def test_parse_tau_spec():
    result = parse_tau_spec("heegner:1,1,2")
    assert result['valid'] and result['values'] == (1, 1, 2)
    result = parse_tau_spec("complex:0.1, 1.2")
    assert result['valid'] and result['values'] == ("0.1", "1.2")
    assert not parse_tau_spec("heegner:1,x,2")['valid']
    assert not parse_tau_spec("complex:0.1")['valid']
    assert not parse_tau_spec("complex:a,b")['valid']
    assert not parse_tau_spec("1,1,2")['valid']


def test_sanitize_filename():
    assert sanitize_filename('run:"1"/2') == "run__1__2"
    assert sanitize_filename(" . ") == "report"
    assert len(sanitize_filename("x" * 300)) == 100


def test_default_report_name():
    name = default_report_name("verify", "json")
    assert name.startswith("verify_")
    assert name.endswith(".json")
