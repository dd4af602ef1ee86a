# Author: Victor
# Page name: test_report_summary.py
# Page purpose: Tests for the report table, statistics, CSV output and chart
# Date of creation: 2026-10-16
import base64

import pandas as pd
import pytest

from identities import VerificationReport
from report_summary import (
    EXACT_AGREEMENT_CAP,
    agreement_digits,
    precision_chart,
    reports_dataframe,
    summary_stats,
    write_csv,
)


def _report(identity_id, rel_diff, passed):
    return VerificationReport(id=identity_id, kind="table_value", digits=30, lhs="1", rhs="1",
                              abs_diff=rel_diff, rel_diff=rel_diff, passed=passed)


REPORTS = [
    _report("table.J.sqrt-2", "1.0e-40", True),
    _report("table.J.sqrt-3", "0.0", True),
    _report("series.sqrt-7", "1.0e-3", False),
]


def test_agreement_digits():
    assert agreement_digits("1.0e-40") == pytest.approx(40)
    assert agreement_digits("0.0") == EXACT_AGREEMENT_CAP
    assert agreement_digits("0.0", cap=500) == 500


def test_dataframe_columns():
    frame = reports_dataframe(REPORTS)
    assert list(frame.columns) == ["id", "group", "kind", "digits", "rel_diff", "agreement_digits", "pass", "notes"]
    assert frame["group"].tolist() == ["table", "table", "series"]


def test_summary_stats():
    stats = summary_stats(REPORTS)
    assert stats["total"] == 3
    assert stats["passed"] == 2
    assert stats["failed"] == 1
    assert stats["failed_ids"] == ["series.sqrt-7"]
    assert stats["worst_agreement"] == 3.0
    assert stats["groups"]["table"] == {"total": 2, "passed": 2, "worst_agreement": 40.0}


def test_summary_of_nothing():
    stats = summary_stats([])
    assert stats["total"] == 0
    assert stats["worst_agreement"] is None


def test_write_csv(tmp_path):
    path = tmp_path / "run.csv"
    write_csv(path, REPORTS)
    frame = pd.read_csv(path)
    assert frame["id"].tolist() == [report.id for report in REPORTS]


def test_precision_chart():
    encoded = precision_chart(REPORTS)
    assert base64.b64decode(encoded).startswith(b"\x89PNG")
    assert precision_chart([]) is None
