# Author: Victor
# Page name: report_io.py
# Page purpose: JSON export and import of verification runs
# Date of creation: 2026-10-16
import json
import logging
from datetime import datetime

from pydantic import ValidationError

from identities import VerificationReport

logger = logging.getLogger(__name__)

EXPORT_VERSION = '1.0'


def export_reports(reports, digits=None):
    """Serialize reports to a JSON document with version and export_date."""
    data = {
        'reports': [report.to_json_dict() for report in reports],
        'digits': digits,
        'passed': sum(1 for report in reports if report.passed),
        'failed': sum(1 for report in reports if not report.passed),
        'export_date': datetime.now().isoformat(),
        'version': EXPORT_VERSION
    }
    return json.dumps(data, indent=2)


def write_reports(path, reports, digits=None):
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(export_reports(reports, digits))
    logger.info("Wrote %d reports to %s", len(reports), path)


def import_reports(source):
    """Reports from a JSON string, bytes or open file; raises ValueError on bad input."""
    try:
        if hasattr(source, 'read'):
            data = json.load(source)
        else:
            data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ValueError(f"Invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get('reports'), list):
        raise ValueError("Invalid data format: expected an object with a 'reports' list")
    if data.get('version') != EXPORT_VERSION:
        logger.warning("Importing reports written by version %s", data.get('version'))
    try:
        return [VerificationReport.model_validate(item) for item in data['reports']]
    except ValidationError as exc:
        raise ValueError(f"Invalid report entry: {exc}") from exc


def read_reports(path):
    with open(path, 'r', encoding='utf-8') as handle:
        return import_reports(handle)
