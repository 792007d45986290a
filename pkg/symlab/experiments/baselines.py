"""Pinned regression baselines.

Asymptotic constants are not reproducible at finite N, so scans compare
against values pinned from an earlier run: growth ``rho_I`` per N for
each k, and the lemma audit's measured constant per grid point. Each
label gets a JSON file keyed by a sanitised version of the label.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from symlab.errors import ReportError
from symlab.reporting.codec import encode_cell


def _label_to_filename(label: str) -> str:
    """Replace anything but alphanumerics, hyphens and underscores with ``_``."""
    safe = re.sub(r"[^a-zA-Z0-9_\-]", "_", label)
    return safe.strip("_")


def baseline_label(kind: str, k: int | None = None) -> str:
    """``growth_k3``, ``lemma_audit`` and so on."""
    return f"{kind}_k{k}" if k is not None else kind


def store_baseline(label: str, values: dict[Any, Any], output_dir: str | Path) -> Path:
    """Store baseline values for a label, overwriting any earlier file.

    Keys are written as strings; exact rationals as ``num/den`` strings,
    other numbers as JSON numbers.

    Returns:
        Path to the written baseline file.
    """
    output_path = Path(output_dir)
    output_path.mkdir(parents=True, exist_ok=True)
    file_path = output_path / (_label_to_filename(label) + ".json")

    encoded = {
        str(key): encode_cell(val) if isinstance(val, Fraction) else val
        for key, val in values.items()
    }
    data = {"label": label, "values": encoded}
    file_path.write_text(json.dumps(data, indent=2, sort_keys=False) + "\n")
    return file_path


def load_baseline(label: str, output_dir: str | Path) -> dict[str, Any] | None:
    """Load the values pinned for a label, or None when nothing is pinned."""
    file_path = Path(output_dir) / (_label_to_filename(label) + ".json")
    if not file_path.exists():
        return None
    try:
        data = json.loads(file_path.read_text())
        return dict(data["values"])
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise ReportError(f"Malformed baseline {file_path}: {e}") from e
