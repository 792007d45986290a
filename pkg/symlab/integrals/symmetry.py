"""Symmetry sums and the symmetry / mixed symmetry integrals.

x ranges over N <= x < 2N. The discrete integral sums S_f(x)^2 over those
integers; the continuous one is the real integral over [N, 2N], whose
integrand is constant on each (m, m+1) where it equals the dashed sum
S_f(m) - f(m) + f(m-h). Both are exact sums of integer (or rational)
squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal, Union

import numpy as np
from scipy import integrate

from symlab.arith.tables import FunctionTable
from symlab.errors import DomainError
from symlab.reporting.codec import encode_cell

Mode = Literal["discrete", "continuous"]
MODES = ("discrete", "continuous")
Number = Union[int, Fraction, float]


@dataclass
class IntegralReport:
    """An integral value with its parameters and named sub-values."""

    kind: str
    value: Number
    mode: str
    N: int
    h: int
    f_label: str
    f1_label: str | None = None
    terms: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """Flat JSON object; exact values as num/den strings."""
        return {
            "kind": self.kind,
            "value": encode_cell(_as_exact(self.value)),
            "mode": self.mode,
            "N": self.N,
            "h": self.h,
            "f_label": self.f_label,
            "f1_label": self.f1_label,
            "terms": {k: encode_cell(v) for k, v in self.terms.items()},
        }

    def to_row(self) -> dict[str, Any]:
        """One flat CSV row: parameters, value, then every term."""
        row: dict[str, Any] = {
            "kind": self.kind,
            "mode": self.mode,
            "N": self.N,
            "h": self.h,
            "f_label": self.f_label,
            "f1_label": self.f1_label or "",
            "value": _as_exact(self.value),
        }
        row.update(self.terms)
        return row


def _as_exact(v: Any) -> Any:
    # whole numbers still serialize as num/1
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return Fraction(int(v))
    return v


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise DomainError(f"Unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    return mode


def check_integral_range(f: FunctionTable, N: int, h: int) -> None:
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")
    if N <= h:
        raise DomainError(f"Integrals need N > h, got N={N}, h={h}")
    f.require_range(1, 2 * N - 1 + h)


def symmetry_sum(f: FunctionTable, x: int, h: int, dashed: bool = False) -> Number:
    """S_f(x) = sum_{|n-x|<=h} sgn(n-x) f(n); dashed: minus f(x), plus f(x-h)."""
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")
    if x <= h:
        raise DomainError(f"symmetry_sum() needs x > h, got x={x}, h={h}")
    f.require_range(x - h, x + h)
    P = f.prefix_sums
    value = (P[x + h] - P[x]) - (P[x - 1] - P[x - h - 1])
    if dashed:
        value = value - f.values[x] + f.values[x - h]
    return _scalar(value)


def symmetry_sums(f: FunctionTable, N: int, h: int, dashed: bool = False) -> np.ndarray:
    """S_f(x) (or its dashed form) for every x in [N, 2N)."""
    check_integral_range(f, N, h)
    P = f.prefix_sums
    xs = np.arange(N, 2 * N)
    sums = (P[xs + h] - P[xs]) - (P[xs - 1] - P[xs - h - 1])
    if dashed:
        sums = sums - f.values[xs] + f.values[xs - h]
    return sums


def exact_dot(a: np.ndarray, b: np.ndarray) -> Number:
    """sum a_i b_i in Python ints / Fractions; int64 products could wrap."""
    total = sum((x * y for x, y in zip(a.tolist(), b.tolist())), 0)
    return _scalar(total)


def symmetry_integral(f: FunctionTable, N: int, h: int, mode: Mode = "discrete") -> IntegralReport:
    """I_f(N, h) exactly."""
    check_mode(mode)
    sums = symmetry_sums(f, N, h, dashed=(mode == "continuous"))
    return IntegralReport(
        kind="symmetry",
        value=exact_dot(sums, sums),
        mode=mode,
        N=N,
        h=h,
        f_label=f.label,
    )


def mixed_symmetry_integral(
    f: FunctionTable, f1: FunctionTable, N: int, h: int, mode: Mode = "discrete"
) -> IntegralReport:
    """I_{f,f1}(N, h) exactly; may be negative."""
    check_mode(mode)
    dashed = mode == "continuous"
    value = exact_dot(symmetry_sums(f, N, h, dashed), symmetry_sums(f1, N, h, dashed))
    return IntegralReport(
        kind="mixed",
        value=value,
        mode=mode,
        N=N,
        h=h,
        f_label=f.label,
        f1_label=f1.label,
    )


def quadrature_symmetry_integral(
    f: FunctionTable, f1: FunctionTable | None, N: int, h: int
) -> float:
    """Adaptive quadrature of the defining integral over [N, 2N].

    Breakpoints at every integer let QUADPACK see the piecewise-constant
    integrand.
    """
    check_integral_range(f, N, h)
    P = f.prefix_sums.astype(np.float64)
    P1 = P if f1 is None else f1.prefix_sums.astype(np.float64)
    if f1 is not None:
        check_integral_range(f1, N, h)

    def window(prefix: np.ndarray, x: float) -> float:
        lo = math.ceil(x - h)
        hi = math.floor(x + h)
        fl = math.floor(x)
        left_end = fl - 1 if fl == x else fl
        return (prefix[hi] - prefix[fl]) - (prefix[left_end] - prefix[lo - 1])

    def integrand(x: float) -> float:
        return window(P, x) * window(P1, x)

    value, _ = integrate.quad(
        integrand,
        N,
        2 * N,
        points=list(range(N + 1, 2 * N)),
        limit=4 * N + 50,
    )
    return float(value)


@dataclass(frozen=True)
class InequalityCheck:
    """I_f, I_{f1}, I_{f,f1} and I_{f-f1} for one (N, h, mode)."""

    I_f: Number
    I_f1: Number
    I_mixed: Number
    I_difference: Number

    @property
    def identity_holds(self) -> bool:
        """I_{f-f1} = I_f - 2 I_{f,f1} + I_{f1}."""
        return self.I_difference == self.I_f - 2 * self.I_mixed + self.I_f1

    @property
    def inequality_holds(self) -> bool:
        """I_f >= 2 I_{f,f1} - I_{f1}."""
        return self.I_f >= 2 * self.I_mixed - self.I_f1

    @property
    def cauchy_schwarz_holds(self) -> bool:
        return self.I_mixed * self.I_mixed <= self.I_f * self.I_f1


def inequality_one_check(
    f: FunctionTable, f1: FunctionTable, N: int, h: int, mode: Mode = "discrete"
) -> InequalityCheck:
    """Evaluate the four integrals behind the expansion of I_{f-f1}."""
    return InequalityCheck(
        I_f=symmetry_integral(f, N, h, mode).value,
        I_f1=symmetry_integral(f1, N, h, mode).value,
        I_mixed=mixed_symmetry_integral(f, f1, N, h, mode).value,
        I_difference=symmetry_integral(f.difference(f1), N, h, mode).value,
    )


def _scalar(v: Any) -> Number:
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v
