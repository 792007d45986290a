"""Cell encoding shared by every report writer.

Exact rationals are written as ``num/den``, doubles with 15 significant
digits, booleans as ``0``/``1`` and missing values as the empty string.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

import numpy as np


def encode_cell(value: Any) -> str:
    """Serialize one report value to its stable text form."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".15g")
    return str(value)


def encode_row(row: dict[str, Any]) -> dict[str, str]:
    """Encode every cell of a flat row, keeping key order."""
    return {key: encode_cell(value) for key, value in row.items()}
