"""Scan configuration file management.

Reads and writes the flat ``key = value`` scan config that drives
``symlab scan``. Blank lines and ``#`` comments are ignored; rationals are
written ``num/den``; integer lists are comma separated and accept ``a^b``
powers and ``a^b..a^c`` exponent ranges (``N_grid = 2^14..2^18``).

Exponents are exact rationals so that the derived widths and levels
h = floor(N^theta), D = floor(N^delta), Q = floor(N^lambda) come from
integer roots and agree on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from symlab.arith.rational import format_rational, integer_power_floor, parse_rational
from symlab.errors import ConfigError, DomainError

KINDS = ("growth", "identity_survey", "lemma_audit", "connection_audit")
DASHED_CHOICES = ("both", "true", "false")

# Default configuration values
DEFAULT_CONFIG: dict[str, Any] = {
    "kind": "growth",
    "k": 3,
    "theta": "1/4",
    "delta": "1/3",
    "lambda": "1/2",
    "N_grid": "2^14..2^16",
    "output_path": "report.csv",
    "seed": 0,
    "q_max": 300,
    "h_max": 300,
    "format": "csv",
    "max_parallel": None,
    "baseline_dir": None,
    "record_timing": False,
    "dashed": "both",
}

_THETA_KINDS = frozenset({"growth", "lemma_audit", "connection_audit"})


@dataclass(frozen=True)
class GridPoint:
    """One N of the grid with its exact width and levels."""

    N: int
    h: int
    D: int
    Q: int


def _parse_int(token: str) -> int:
    token = token.strip()
    if "^" in token:
        base, _, exp = token.partition("^")
        return int(base) ** int(exp)
    return int(token)


def parse_int_list(text: str) -> list[int]:
    """Parse ``4096, 2^13, 2^14..2^16`` into a list of integers."""
    values: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo, _, hi = token.partition("..")
            lo_base, _, lo_exp = lo.strip().partition("^")
            hi_base, _, hi_exp = hi.strip().partition("^")
            if lo_exp and hi_exp and lo_base == hi_base:
                values.extend(int(lo_base) ** e for e in range(int(lo_exp), int(hi_exp) + 1))
            else:
                values.extend(range(_parse_int(lo), _parse_int(hi) + 1))
        else:
            values.append(_parse_int(token))
    return values


def _parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("true", "1", "yes"):
        return True
    if text in ("false", "0", "no", ""):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    return str(value)


class ScanConfig:
    """Manages a ``key = value`` scan configuration file."""

    def __init__(self, path: Path | None = None, overrides: dict[str, Any] | None = None) -> None:
        self.path = path
        self._data: dict[str, Any] = dict(DEFAULT_CONFIG)
        if path is not None:
            self._load()
        if overrides:
            self._data.update(overrides)

    def _load(self) -> None:
        """Load config from the file."""
        assert self.path is not None
        try:
            text = self.path.read_text()
        except OSError as e:
            raise ConfigError([f"readable config file ({e})"]) from e
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            key, sep, value = stripped.partition("=")
            if not sep:
                raise ConfigError([f"key = value at line {lineno}"])
            self._data[key.strip()] = value.strip()

    def save(self) -> None:
        """Write config to the file."""
        if self.path is None:
            raise ConfigError(["config file path specified"])
        self.path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"{key} = {_format_value(value)}" for key, value in self._data.items()]
        self.path.write_text("\n".join(lines) + "\n")

    @property
    def config(self) -> dict[str, Any]:
        """Get the full configuration dict."""
        return dict(self._data)

    @property
    def kind(self) -> str:
        return str(self._data["kind"]).strip()

    @property
    def k(self) -> int:
        return int(self._data["k"])

    @property
    def theta(self) -> Fraction:
        return parse_rational(str(self._data["theta"]))

    @property
    def delta(self) -> Fraction:
        return parse_rational(str(self._data["delta"]))

    @property
    def lam(self) -> Fraction:
        """The level exponent (``lambda`` in the file)."""
        return parse_rational(str(self._data["lambda"]))

    @property
    def N_grid(self) -> list[int]:
        val = self._data["N_grid"]
        if isinstance(val, (list, tuple)):
            return [int(v) for v in val]
        return parse_int_list(str(val))

    @property
    def output_path(self) -> Path:
        return Path(str(self._data["output_path"]))

    @property
    def seed(self) -> int:
        return int(self._data["seed"])

    @property
    def q_max(self) -> int:
        return int(self._data["q_max"])

    @property
    def h_max(self) -> int:
        return int(self._data["h_max"])

    @property
    def format(self) -> str:
        """Report format; defaults to the output file suffix when left empty."""
        val = str(self._data.get("format") or "").strip()
        return val or self.output_path.suffix.lstrip(".").lower()

    @property
    def max_parallel(self) -> int | None:
        """Get the max parallel grid points (None = sequential)."""
        val = self._data.get("max_parallel")
        return int(val) if val not in (None, "") else None

    @property
    def baseline_dir(self) -> Path | None:
        val = self._data.get("baseline_dir")
        return Path(str(val)) if val not in (None, "") else None

    @property
    def record_timing(self) -> bool:
        return _parse_bool(self._data.get("record_timing", False))

    @property
    def dashed(self) -> tuple[bool, ...]:
        """Conventions a lemma audit runs: (True, False), (True,) or (False,)."""
        val = str(self._data.get("dashed", "both")).strip().lower()
        return {"both": (True, False), "true": (True,), "false": (False,)}[val]

    def validate(self) -> None:
        """Check every constraint before any computation starts.

        Raises:
            ConfigError: Listing every violation; ``inequality`` names
                the first one.
        """
        violations: list[str] = []

        unknown = sorted(set(self._data) - set(DEFAULT_CONFIG))
        if unknown:
            violations.append(f"known keys (unknown: {', '.join(unknown)})")

        kind = self.kind
        if kind not in KINDS:
            violations.append(f"kind in {{{', '.join(KINDS)}}}")

        try:
            theta, delta, lam = self.theta, self.delta, self.lam
        except DomainError as e:
            violations.append(f"exact rational exponents ({e})")
            theta = delta = lam = None

        try:
            k = self.k
        except ValueError:
            violations.append("integer k")
            k = None

        if theta is not None and kind in _THETA_KINDS:
            if not (0 < theta < Fraction(1, 2)):
                violations.append("0<θ<1/2")
            if kind == "growth" and k is not None and k >= 1 and theta >= Fraction(1, k):
                violations.append("θ<1/k")
            if kind == "lemma_audit":
                if not (theta < delta < lam):
                    violations.append("θ<δ<λ")
                if delta + lam >= 1:
                    violations.append("δ+λ<1")
            if kind == "connection_audit" and not (0 < lam < 1):
                violations.append("0<λ<1")

        if kind == "growth" and k is not None and k < 3:
            violations.append("k>=3")

        try:
            grid = self.N_grid
            if kind in _THETA_KINDS and (not grid or min(grid) < 2):
                violations.append("non-empty N_grid with N>=2")
        except ValueError:
            violations.append("integer N_grid")

        try:
            if kind == "identity_survey" and (self.q_max < 2 or self.h_max < 2):
                violations.append("q_max>=2 and h_max>=2")
            self.seed
        except ValueError:
            violations.append("integer q_max, h_max and seed")

        if self.format not in ("csv", "json"):
            violations.append("format in {csv, json}")

        try:
            par = self.max_parallel
            if par is not None and par < 1:
                violations.append("max_parallel>=1")
        except ValueError:
            violations.append("integer max_parallel")

        try:
            self.record_timing
        except ValueError:
            violations.append("boolean record_timing")

        if str(self._data.get("dashed", "both")).strip().lower() not in DASHED_CHOICES:
            violations.append("dashed in {both, true, false}")

        if violations:
            raise ConfigError(violations)

    def grid_point(self, N: int) -> GridPoint:
        """Exact h, D and Q for one grid N."""
        return GridPoint(
            N=N,
            h=integer_power_floor(N, self.theta),
            D=integer_power_floor(N, self.delta),
            Q=integer_power_floor(N, self.lam),
        )

    def grid_points(self) -> list[GridPoint]:
        return [self.grid_point(N) for N in self.N_grid]
