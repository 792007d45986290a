"""Report writing and rendering (CSV and JSON)."""

from symlab.reporting.codec import encode_cell, encode_row
from symlab.reporting.reporter import (
    FORMATS,
    LoadedReport,
    Reporter,
    load_report,
    render_report,
    summary_path,
)

__all__ = [
    "FORMATS",
    "LoadedReport",
    "Reporter",
    "encode_cell",
    "encode_row",
    "load_report",
    "render_report",
    "summary_path",
]
