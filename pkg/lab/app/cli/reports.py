# lab/app/cli/reports.py
"""
Report output: JSON (pydantic, shortest round-trip floats), CSV and the
plain-text tables printed by the CLI (17 significant digits).
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable

from pydantic import BaseModel

from app.constants import ReportFormat
from app.models import (
    CheckCampaignReport,
    CheckReport,
    IdSummary,
    RadiusReport,
    SharpnessReport,
    SweepReport,
)

CHECK_COLUMNS = [
    "id",
    "statement",
    "applicable",
    "lhs",
    "rhs",
    "slack",
    "holds",
    "params",
    "kind",
    "tol",
    "expected_falsifiable",
]
SUMMARY_COLUMNS = [
    "id",
    "statement",
    "expected_falsifiable",
    "count",
    "applicable",
    "violations",
    "min_slack",
    "mean_slack",
]


def fmt_number(x: Any) -> str:
    """17 significant digits for reals, '-' for missing values."""
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.{ReportFormat.SIGNIFICANT_DIGITS}g}"
    return str(x)


def fmt_params(params: dict[str, float]) -> str:
    if not params:
        return ""
    return ",".join(f"{k}={fmt_number(v)}" for k, v in sorted(params.items()))


def _table(header: list[str], rows: Iterable[list[str]]) -> str:
    rows = list(rows)
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
    return "\n".join(lines)


def render_checks(results: list[CheckReport]) -> str:
    header = ["id", "params", "lhs", "rhs", "slack", "holds"]
    rows = []
    for r in results:
        holds = "n/a" if not r.applicable else fmt_number(r.holds)
        if r.expected_falsifiable and r.applicable:
            holds += " (probe)"
        rows.append([r.id, fmt_params(r.params), fmt_number(r.lhs), fmt_number(r.rhs), fmt_number(r.slack), holds])
    return _table(header, rows)


def _summary_rows(summaries: list[IdSummary]) -> list[list[str]]:
    return [
        [
            s.id,
            str(s.applicable),
            str(s.violations),
            fmt_number(s.min_slack),
            fmt_number(s.mean_slack),
        ]
        for s in summaries
    ]


def render_sweep(report: SweepReport) -> str:
    header = ["id", "applicable", "violations", "min_slack", "mean_slack"]
    text = _table(header, _summary_rows(report.checks))
    if report.probes:
        text += "\n\nprobes (expected to fail)\n" + _table(header, _summary_rows(report.probes))
    return text


def render_sharpness(report: SharpnessReport) -> str:
    lines = [
        f"check      {report.check_id} {fmt_params(report.params)}".rstrip(),
        f"class      {report.matrix_class} (n = {report.block_dim})",
        f"restarts   {report.restarts} x {report.iterations} iterations, seed {report.seed}",
        f"best slack {fmt_number(report.slack)}",
    ]
    return "\n".join(lines)


def render_radius(report: RadiusReport) -> str:
    rows = [
        ["omega", fmt_number(report.omega)],
        ["norm", fmt_number(report.norm)],
        ["norm_re", fmt_number(report.real_norm)],
        ["norm_im", fmt_number(report.imag_norm)],
    ]
    rows.extend([name, fmt_number(value)] for name, value in report.classes.items())
    if report.closed_form is not None:
        rows.extend(
            [
                ["closed_form", fmt_number(report.closed_form)],
                ["closed_form_exact", fmt_number(report.closed_form_exact)],
                ["closed_form_applies", fmt_number(report.closed_form_applies)],
                ["closed_form_diff", fmt_number(report.closed_form_difference)],
            ]
        )
    return _table(["quantity", "value"], rows)


# ----------------------------------------------------------------------
# Files
# ----------------------------------------------------------------------


def _csv_cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return fmt_number(value) if value is not None else ""


def _csv_rows(report: BaseModel) -> tuple[list[str], list[dict[str, Any]]]:
    if isinstance(report, CheckCampaignReport):
        return CHECK_COLUMNS, [r.model_dump(include=set(CHECK_COLUMNS)) for r in report.results]
    if isinstance(report, SweepReport):
        rows = [s.model_dump(include=set(SUMMARY_COLUMNS)) for s in report.checks + report.probes]
        return SUMMARY_COLUMNS, rows
    data = report.model_dump()
    return list(data.keys()), [data]


def to_csv(report: BaseModel) -> str:
    columns, rows = _csv_rows(report)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _csv_cell(row.get(c)) for c in columns})
    return buffer.getvalue()


def to_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2) + "\n"


def write_report(report: BaseModel, path: Path) -> None:
    """CSV when the path ends in .csv, JSON otherwise."""
    text = to_csv(report) if path.suffix.lower() == ReportFormat.CSV_SUFFIX else to_json(report)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
