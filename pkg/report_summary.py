# Author: Victor
# Page name: report_summary.py
# Page purpose: Summary table, statistics and a precision chart for a set of verification reports
# Date of creation: 2026-10-16
# pandas holds one row per report; the chart shows how many digits each identity agreed to.
import base64
import io
import logging

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import mpmath  # noqa: E402
import pandas as pd  # noqa: E402

from utils import parse_number  # noqa: E402

logger = logging.getLogger(__name__)

# agreement shown for rel_diff == 0
EXACT_AGREEMENT_CAP = 10_000


def agreement_digits(rel_diff, cap=EXACT_AGREEMENT_CAP):
    """-log10(rel_diff) as a float, capped for exact agreement."""
    value = abs(parse_number(rel_diff))
    if value == 0:
        return float(cap)
    return float(min(-mpmath.log10(value), cap))


def reports_dataframe(reports):
    rows = []
    for report in reports:
        rows.append({
            "id": report.id,
            "group": report.id.split(".")[0],
            "kind": report.kind,
            "digits": report.digits,
            "rel_diff": report.rel_diff,
            "agreement_digits": agreement_digits(report.rel_diff),
            "pass": report.passed,
            "notes": "; ".join(report.notes),
        })
    columns = ["id", "group", "kind", "digits", "rel_diff", "agreement_digits", "pass", "notes"]
    return pd.DataFrame(rows, columns=columns)


def summary_stats(reports):
    frame = reports_dataframe(reports)
    if frame.empty:
        return {
            "total": 0,
            "passed": 0,
            "failed": 0,
            "failed_ids": [],
            "worst_agreement": None,
            "groups": {}
        }
    groups = {}
    for group, part in frame.groupby("group"):
        groups[group] = {
            "total": int(len(part)),
            "passed": int(part["pass"].sum()),
            "worst_agreement": round(float(part["agreement_digits"].min()), 1)
        }
    return {
        "total": int(len(frame)),
        "passed": int(frame["pass"].sum()),
        "failed": int((~frame["pass"]).sum()),
        "failed_ids": frame.loc[~frame["pass"], "id"].tolist(),
        "worst_agreement": round(float(frame["agreement_digits"].min()), 1),
        "groups": groups
    }


def write_csv(path, reports):
    reports_dataframe(reports).to_csv(path, index=False)
    logger.info("Wrote %d rows to %s", len(reports), path)


def precision_chart(reports):
    """Base64 PNG bar chart of agreement digits per record; None when there is nothing to plot."""
    frame = reports_dataframe(reports)
    if frame.empty:
        return None
    try:
        fig, ax = plt.subplots(figsize=(10, max(4, 0.22 * len(frame))))
        colors = ['seagreen' if ok else 'firebrick' for ok in frame["pass"]]
        ax.barh(frame["id"], frame["agreement_digits"], color=colors, alpha=0.8)
        threshold = max(frame["digits"].max() - 10, 0)
        ax.axvline(threshold, color='grey', linestyle='--', linewidth=1)
        ax.set_title("Digits of agreement per identity", fontsize=14, fontweight='bold')
        ax.set_xlabel("-log10(rel_diff)", fontsize=12)
        ax.invert_yaxis()
        ax.grid(True, axis='x', alpha=0.3)
        plt.tight_layout()

        img_buffer = io.BytesIO()
        plt.savefig(img_buffer, format='png', dpi=150, bbox_inches='tight')
        img_buffer.seek(0)
        img_base64 = base64.b64encode(img_buffer.getvalue()).decode()
        plt.close(fig)
        return img_base64
    except (ValueError, RuntimeError) as exc:
        logger.error("Error creating chart: %s", exc)
        plt.close('all')
        return None
