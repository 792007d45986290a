"""Report generation for scan and audit results.

A report is a table of flat rows plus a summary map. It is written as
either CSV or JSON:

- **csv**: header line in column order, one line per row; the summary
  goes to a ``<stem>.summary.json`` sidecar next to the CSV file.
- **json**: ``{"report": {"kind", "columns", "rows", "summary"}}`` with
  every cell already encoded as text.

Cells are encoded by :mod:`symlab.reporting.codec`, so exact rationals
appear as ``num/den`` and doubles with 15 significant digits. Reports
carry no timestamps; identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from symlab.errors import ReportError
from symlab.reporting.codec import encode_cell, encode_row

FORMATS = ("csv", "json")


def check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise ReportError(f"Unknown report format {fmt!r}; expected csv or json")
    return fmt


def format_for_path(path: Path) -> str:
    """Report format implied by the file suffix."""
    return check_format(path.suffix.lstrip(".").lower())


def summary_path(path: Path) -> Path:
    """Sidecar holding the summary of a CSV report."""
    return path.with_name(f"{path.stem}.summary.json")


class Reporter:
    """Collects rows of one report kind and writes them as CSV or JSON.

    Columns are either fixed up front or taken from the rows in
    first-seen order. Rows missing a column are written with an empty
    cell.
    """

    def __init__(self, kind: str, columns: Sequence[str] | None = None) -> None:
        self.kind = kind
        self.columns: list[str] = list(columns) if columns else []
        self._fixed_columns = columns is not None
        self.rows: list[dict[str, Any]] = []
        self.summary: dict[str, Any] = {}

    def add_row(self, row: dict[str, Any]) -> None:
        """Add one flat row to the report.

        Args:
            row: Mapping from column name to raw value.
        """
        if self._fixed_columns:
            unknown = [key for key in row if key not in self.columns]
            if unknown:
                raise ReportError(f"Row has columns outside the {self.kind} schema: {unknown}")
        else:
            self.columns.extend(key for key in row if key not in self.columns)
        self.rows.append(dict(row))

    def add_rows(self, rows: Iterable[dict[str, Any]]) -> None:
        for row in rows:
            self.add_row(row)

    def set_summary(self, key: str, value: Any) -> None:
        self.summary[key] = value

    def update_summary(self, values: dict[str, Any]) -> None:
        self.summary.update(values)

    def generate_report(self) -> dict[str, Any]:
        """Generate the report data structure.

        Returns:
            Dictionary suitable for JSON serialization, with every cell
            encoded as text.
        """
        rows = [
            {col: encode_cell(row.get(col)) for col in self.columns}
            for row in self.rows
        ]
        return {
            "report": {
                "kind": self.kind,
                "columns": list(self.columns),
                "rows": rows,
                "summary": encode_row(self.summary),
            }
        }

    def write_report(self, path: Path, fmt: str | None = None) -> None:
        """Write the report to ``path``.

        Args:
            path: Destination file.
            fmt: ``csv`` or ``json``; defaults to the file suffix.
        """
        fmt = check_format(fmt) if fmt else format_for_path(path)
        data = self.generate_report()["report"]
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "json":
            path.write_text(_dump_json({"report": data}))
            return
        path.write_text(_dump_csv(data["columns"], data["rows"]))
        summary_path(path).write_text(
            _dump_json({"kind": data["kind"], "summary": data["summary"]})
        )


@dataclass
class LoadedReport:
    """A report read back from disk; every cell is text."""

    kind: str
    columns: list[str]
    rows: list[dict[str, str]] = field(default_factory=list)
    summary: dict[str, str] = field(default_factory=dict)

    def column(self, name: str) -> list[str]:
        if name not in self.columns:
            raise ReportError(f"Report {self.kind!r} has no column {name!r}")
        return [row.get(name, "") for row in self.rows]


def load_report(path: Path) -> LoadedReport:
    """Read a CSV or JSON report written by :class:`Reporter`.

    Raises:
        ReportError: The file is missing, malformed, or of unknown format.
    """
    fmt = format_for_path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ReportError(f"Cannot read report {path}: {e}") from e

    if fmt == "json":
        try:
            data = json.loads(text)["report"]
            return LoadedReport(
                kind=data["kind"],
                columns=list(data["columns"]),
                rows=[dict(row) for row in data["rows"]],
                summary=dict(data.get("summary", {})),
            )
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ReportError(f"Malformed JSON report {path}: {e}") from e

    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise ReportError(f"CSV report {path} has no header")
    rows = [dict(row) for row in reader]
    kind, summary = path.stem, {}
    sidecar = summary_path(path)
    if sidecar.exists():
        try:
            side = json.loads(sidecar.read_text())
        except json.JSONDecodeError as e:
            raise ReportError(f"Malformed summary {sidecar}: {e}") from e
        kind = side.get("kind", kind)
        summary = dict(side.get("summary", {}))
    return LoadedReport(kind=kind, columns=list(reader.fieldnames), rows=rows, summary=summary)


def render_report(path: Path, fmt: str) -> str:
    """Render the report at ``path`` as ``fmt`` text.

    CSV output holds the table only; JSON output also carries the
    summary. Column order is the order stored in the report.
    """
    check_format(fmt)
    report = load_report(path)
    if fmt == "csv":
        return _dump_csv(report.columns, report.rows)
    return _dump_json(
        {
            "report": {
                "kind": report.kind,
                "columns": report.columns,
                "rows": [{col: row.get(col, "") for col in report.columns} for row in report.rows],
                "summary": report.summary,
            }
        }
    )


def _dump_csv(columns: Sequence[str], rows: Sequence[dict[str, str]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({col: row.get(col, "") for col in columns})
    return buf.getvalue()


def _dump_json(data: dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
