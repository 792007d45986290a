"""FunctionTable: tabulated arithmetic functions on [1, limit].

Values are stored in a numpy array of length ``limit + 1`` whose slot 0 is
unused (always zero). Integer tables use ``int64`` while the values fit and
fail over to ``object`` arrays of Python ints otherwise; tables with
rational values are ``object`` arrays of Fractions. Arrays are frozen
(``writeable=False``) once a table is built.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from symlab.errors import ArithmeticOverflowError, DomainError, MalformedFileError, TableRangeError

Value = Union[int, Fraction]

# headroom kept below 2**63 for int64 tables
INT64_SAFE = 2 ** 62


@dataclass(frozen=True, eq=False)
class FunctionTable:
    """Exact values of an arithmetic function for every n in [1, limit]."""

    limit: int
    values: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        if self.limit < 1:
            raise DomainError(f"FunctionTable limit must be >= 1, got {self.limit}")
        if len(self.values) != self.limit + 1:
            raise DomainError(
                f"FunctionTable needs {self.limit + 1} slots, got {len(self.values)}"
            )
        arr = np.array(self.values, copy=True)
        arr[0] = 0
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    # -- construction --------------------------------------------------------

    @classmethod
    def from_values(cls, values: Iterable[Value], label: str = "") -> FunctionTable:
        """Build a table from values listed for n = 1, 2, ..., limit."""
        items = list(values)
        if not items:
            raise DomainError("FunctionTable needs at least one value")
        return cls(limit=len(items), values=_to_array([0] + items), label=label)

    @classmethod
    def constant(cls, limit: int, value: Value = 1, label: str = "") -> FunctionTable:
        """The constant function ``value`` on [1, limit]."""
        if limit < 1:
            raise DomainError(f"FunctionTable limit must be >= 1, got {limit}")
        return cls.from_values([value] * limit, label=label or f"const{value}")

    # -- access --------------------------------------------------------------

    @property
    def is_wide(self) -> bool:
        """True when values live in an object array (big ints or Fractions)."""
        return self.values.dtype == object

    def __getitem__(self, n: int) -> Value:
        if not 1 <= n <= self.limit:
            raise TableRangeError(f"n={n} outside table [1, {self.limit}] ({self.label})")
        return _scalar(self.values[n])

    def as_list(self) -> list[Value]:
        """Values for n = 1..limit as Python ints / Fractions."""
        return [_scalar(v) for v in self.values[1:]]

    @cached_property
    def prefix_sums(self) -> np.ndarray:
        """P with P[0] = 0 and P[n] = f(1) + ... + f(n), exact."""
        arr = self.values
        if arr.dtype != object:
            peak = int(np.abs(arr).max())
            if peak * self.limit >= INT64_SAFE:
                arr = arr.astype(object)
        out = np.cumsum(arr)
        out.setflags(write=False)
        return out

    def require_range(self, low: int, high: int) -> None:
        """Raise TableRangeError unless [low, high] lies inside [1, limit]."""
        if low < 1 or high > self.limit:
            raise TableRangeError(
                f"Range [{low}, {high}] outside table [1, {self.limit}] ({self.label})"
            )

    # -- algebra -------------------------------------------------------------

    def difference(self, other: FunctionTable) -> FunctionTable:
        """Pointwise ``self - other`` over the common limit."""
        limit = min(self.limit, other.limit)
        a = self.values[: limit + 1]
        b = other.values[: limit + 1]
        if a.dtype == object or b.dtype == object:
            diff = a.astype(object) - b.astype(object)
        else:
            diff = a.astype(object) - b.astype(object)
            diff = _narrow(diff)
        return FunctionTable(limit=limit, values=diff, label=f"{self.label}-{other.label}")

    def shifted(self, c: Value) -> FunctionTable:
        """Pointwise ``self + c``."""
        vals = self.values.astype(object) + c
        vals[0] = 0
        return FunctionTable(limit=self.limit, values=_narrow(vals), label=f"{self.label}+{c}")

    # -- serialization -------------------------------------------------------

    def to_csv(self, path: Path) -> Path:
        """Write the two-column ``n,value`` CSV with a one-line header."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["n", "value"])
            for n in range(1, self.limit + 1):
                v = self[n]
                writer.writerow([n, _format_value(v)])
        return path

    @classmethod
    def from_csv(cls, path: Path, label: str | None = None) -> FunctionTable:
        """Read a table written by :meth:`to_csv`; rows must cover 1..limit."""
        rows: dict[int, Value] = {}
        with open(path, newline="") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != ["n", "value"]:
                raise MalformedFileError(f"Table {path} needs the header n,value, got {reader.fieldnames}")
            for row in reader:
                try:
                    rows[int(row["n"])] = _parse_value(row["value"])
                except (AttributeError, TypeError, ValueError, ZeroDivisionError) as e:
                    raise MalformedFileError(
                        f"Table {path} line {reader.line_num}: cannot parse {row}"
                    ) from e
        if not rows:
            raise DomainError(f"Empty table file: {path}")
        limit = max(rows)
        missing = [n for n in range(1, limit + 1) if n not in rows]
        if missing:
            raise DomainError(f"Table {path} missing n={missing[0]}")
        return cls.from_values(
            [rows[n] for n in range(1, limit + 1)],
            label=label if label is not None else path.stem,
        )


# ---------------------------------------------------------------------------
# Dirichlet convolution
# ---------------------------------------------------------------------------


def dirichlet_convolve(
    a: FunctionTable,
    b: FunctionTable,
    limit: int | None = None,
    failover: bool = True,
    label: str | None = None,
) -> FunctionTable:
    """Return ``(a * b)(n) = sum_{d|n} a(d) b(n/d)`` for n <= limit.

    int64 tables are checked against a worst-case bound before summing;
    when the bound could overflow the computation fails over to Python
    ints, or raises ArithmeticOverflowError when ``failover`` is False.
    """
    top = limit if limit is not None else min(a.limit, b.limit)
    if top < 1:
        raise DomainError(f"Convolution limit must be >= 1, got {top}")
    a.require_range(1, top)
    b.require_range(1, top)
    out = convolve_arrays(a.values[: top + 1], b.values[: top + 1], top, failover)
    return FunctionTable(
        limit=top,
        values=out,
        label=label if label is not None else f"{a.label}*{b.label}",
    )


def convolve_arrays(
    a: np.ndarray, b: np.ndarray, limit: int, failover: bool = True
) -> np.ndarray:
    """Dirichlet convolution of two slot-0-unused arrays up to ``limit``.

    Divisors d <= sqrt(limit) are handled by strided slices over all their
    multiples; larger divisors are grouped by their cofactor c, which is
    then at most sqrt(limit), so both loops run O(sqrt(limit)) times.
    """
    dtype = _result_dtype(a, b, limit, failover)
    a = a.astype(dtype)
    b = b.astype(dtype)
    out = np.zeros(limit + 1, dtype=dtype)
    root = math.isqrt(limit)
    for d in range(1, root + 1):
        ad = a[d]
        if ad == 0:
            continue
        out[d::d] += ad * b[1 : limit // d + 1]
    for c in range(1, limit // (root + 1) + 1):
        bc = b[c]
        if bc == 0:
            continue
        lo, hi = root + 1, limit // c
        if hi < lo:
            continue
        out[c * np.arange(lo, hi + 1)] += a[lo : hi + 1] * bc
    if dtype == object:
        out[0] = 0
    return out


def _result_dtype(a: np.ndarray, b: np.ndarray, limit: int, failover: bool) -> type:
    if a.dtype == object or b.dtype == object:
        return object
    peak_a = int(np.abs(a[: limit + 1]).max())
    peak_b = int(np.abs(b[: limit + 1]).max())
    # a divisor count never exceeds 2*sqrt(limit)
    bound = peak_a * peak_b * 2 * (math.isqrt(limit) + 1)
    if bound < INT64_SAFE:
        return np.int64
    if not failover:
        raise ArithmeticOverflowError(
            f"Convolution bound {bound} exceeds int64 headroom at limit {limit}"
        )
    return object


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _scalar(v: object) -> Value:
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    return v  # type: ignore[return-value]


def _to_array(items: list[Value]) -> np.ndarray:
    if all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in items):
        ints = [int(v) for v in items]
        if max(abs(v) for v in ints) < INT64_SAFE:
            return np.array(ints, dtype=np.int64)
        return np.array(ints, dtype=object)
    arr = np.empty(len(items), dtype=object)
    for i, v in enumerate(items):
        arr[i] = Fraction(v) if not isinstance(v, Fraction) else v
    return arr


def _narrow(arr: np.ndarray) -> np.ndarray:
    """Move an object array of ints back to int64 when every value fits."""
    items = arr.tolist()
    if all(isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1) for v in items):
        ints = [int(v) for v in items]
        if max(abs(v) for v in ints) < INT64_SAFE:
            return np.array(ints, dtype=np.int64)
    return arr


def _format_value(v: Value) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _parse_value(text: str) -> Value:
    raw = text.strip()
    if "/" in raw:
        frac = Fraction(raw.replace(" ", ""))
        return frac.numerator if frac.denominator == 1 else frac
    return int(raw)
