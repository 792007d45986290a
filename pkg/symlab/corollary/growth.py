"""Growth audit of I_{d_k} and J_k against N h (log N)^{k+1}."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from symlab.arith.rational import Rational, as_fraction, integer_power_floor
from symlab.arith.sieves import sieve_divisor_k
from symlab.arith.tables import FunctionTable
from symlab.errors import DomainError, HypothesisViolation
from symlab.integrals.selberg import fit_log_polynomial, selberg_integral
from symlab.integrals.symmetry import symmetry_integral

GROWTH_COLUMNS = (
    "k",
    "theta_num",
    "theta_den",
    "N",
    "h",
    "I_dk",
    "J_k",
    "rho_I",
    "rho_J",
    "runtime_ms",
)


@dataclass(frozen=True)
class GrowthPoint:
    """I_{d_k} and J_k at one N, normalised by N h (log N)^{k+1}."""

    k: int
    theta: Fraction
    N: int
    h: int
    I_dk: int
    J_k: float
    rho_I: float
    rho_J: float
    runtime_ms: float | None = None

    @property
    def J_over_I(self) -> float:
        return self.J_k / self.I_dk if self.I_dk else math.inf

    def to_row(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "theta_num": self.theta.numerator,
            "theta_den": self.theta.denominator,
            "N": self.N,
            "h": self.h,
            "I_dk": self.I_dk,
            "J_k": self.J_k,
            "rho_I": self.rho_I,
            "rho_J": self.rho_J,
            "runtime_ms": self.runtime_ms,
        }


def growth_width(k: int, theta: Rational, N: int) -> int:
    """h = floor(N^theta) after checking 0 < theta < 1/k and h >= 2."""
    t = as_fraction(theta)
    if t <= 0:
        raise DomainError(f"theta must be positive, got {t}")
    if t >= Fraction(1, k):
        raise HypothesisViolation([f"θ<1/k (θ={t}, k={k})"])
    h = integer_power_floor(N, t)
    if h < 2:
        raise DomainError(f"h = floor({N}^{t}) = {h} is below 2")
    return h


def corollary_growth_ratio(
    k: int,
    theta: Rational,
    N: int,
    table: FunctionTable | None = None,
    record_timing: bool = False,
) -> GrowthPoint:
    """rho_I = I_{d_k}/(N h L^{k+1}) and rho_J likewise, with L = log N.

    I_{d_k} is the exact continuous integral; J_k uses a least-squares
    log-polynomial of degree k - 1 fitted over the same range.
    """
    if k < 3:
        raise DomainError(f"k must be >= 3, got {k}")
    t = as_fraction(theta)
    h = growth_width(k, t, N)
    started = time.perf_counter()
    limit = 2 * N - 1 + h
    dk = table if table is not None else sieve_divisor_k(k, limit)
    I_dk = int(symmetry_integral(dk, N, h, "continuous").value)
    model = fit_log_polynomial(dk, N, h, k - 1)
    J_k = float(selberg_integral(dk, N, h, model).value)
    scale = N * h * math.log(N) ** (k + 1)
    runtime = (time.perf_counter() - started) * 1000 if record_timing else None
    return GrowthPoint(
        k=k,
        theta=t,
        N=N,
        h=h,
        I_dk=I_dk,
        J_k=J_k,
        rho_I=I_dk / scale,
        rho_J=J_k / scale,
        runtime_ms=runtime,
    )


@dataclass(frozen=True)
class NonDegradation:
    holds: bool
    min_top: float
    min_bottom: float


def growth_non_degradation(
    points: Sequence[GrowthPoint], window: int = 3, factor: float = 0.5
) -> NonDegradation:
    """min rho_I over the largest ``window`` N against ``factor`` times the smallest."""
    if len(points) < window:
        raise DomainError(f"Need at least {window} grid points, got {len(points)}")
    ordered = sorted(points, key=lambda p: p.N)
    min_bottom = min(p.rho_I for p in ordered[:window])
    min_top = min(p.rho_I for p in ordered[-window:])
    positive = all(p.rho_I > 0 and p.rho_J > 0 for p in ordered)
    return NonDegradation(
        holds=positive and min_top >= factor * min_bottom,
        min_top=min_top,
        min_bottom=min_bottom,
    )


@dataclass(frozen=True)
class HarmonicCheck:
    k: int
    x: int
    sum: float
    floor_bound: float

    @property
    def holds(self) -> bool:
        return self.sum >= self.floor_bound


def _harmonic_floor(k: int, x: np.ndarray | float) -> np.ndarray | float:
    return (np.log(x) / (k - 1)) ** (k - 1)


def divisor_harmonic_lower_check(k: int, x: int) -> HarmonicCheck:
    """sum_{n<=x} d_{k-1}(n)/n against (log x / (k-1))^{k-1}."""
    if k < 2 or x < 2:
        raise DomainError(f"Need k >= 2 and x >= 2, got k={k}, x={x}")
    d = sieve_divisor_k(k - 1, x).values[1:].astype(np.float64)
    total = math.fsum((d / np.arange(1, x + 1)).tolist())
    return HarmonicCheck(k=k, x=x, sum=total, floor_bound=float(_harmonic_floor(k, float(x))))


@dataclass(frozen=True)
class HarmonicSweep:
    k: int
    x_max: int
    min_margin: float
    worst_x: int

    @property
    def holds(self) -> bool:
        return self.min_margin >= 0


def divisor_harmonic_sweep(k: int, x_max: int) -> HarmonicSweep:
    """Smallest sum - floor_bound over every x in [2, x_max]."""
    if k < 2 or x_max < 2:
        raise DomainError(f"Need k >= 2 and x_max >= 2, got k={k}, x_max={x_max}")
    d = sieve_divisor_k(k - 1, x_max).values[1:].astype(np.float64)
    n = np.arange(1, x_max + 1, dtype=np.float64)
    sums = np.cumsum(d / n)[1:]
    margins = sums - _harmonic_floor(k, n[1:])
    idx = int(np.argmin(margins))
    return HarmonicSweep(k=k, x_max=x_max, min_margin=float(margins[idx]), worst_x=idx + 2)
