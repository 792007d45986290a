"""Farey spacing and the geometric sum bound behind the large-sieve step."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from symlab.arith.rational import Rational, as_fraction, nearest_integer_distance
from symlab.errors import DomainError


@dataclass(frozen=True)
class FareyPair:
    """Two reduced fractions j/ell and r/t, with alpha their difference."""

    j: int
    ell: int
    r: int
    t: int
    alpha: Fraction = field(init=False)

    def __post_init__(self) -> None:
        if self.ell < 1 or self.t < 1:
            raise DomainError(f"Denominators must be >= 1: {self.ell}, {self.t}")
        if math.gcd(self.j, self.ell) != 1 or math.gcd(self.r, self.t) != 1:
            raise DomainError(f"{self.j}/{self.ell} or {self.r}/{self.t} not in lowest terms")
        object.__setattr__(self, "alpha", Fraction(self.j, self.ell) - Fraction(self.r, self.t))

    @property
    def gap(self) -> Fraction:
        return nearest_integer_distance(self.alpha)


@dataclass
class FareyAudit:
    """Outcome of farey_spacing_audit()."""

    D: int
    Q: int
    pairs_checked: int = 0
    violations: list[FareyPair] = field(default_factory=list)
    min_scaled_gap: Fraction | None = None

    @property
    def holds(self) -> bool:
        return not self.violations


def farey_fractions(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Numerators and denominators of the reduced j/l in [0, 1) with l <= order."""
    nums: list[int] = []
    dens: list[int] = []
    for ell in range(1, order + 1):
        for j in range(ell):
            if math.gcd(j, ell) == 1:
                nums.append(j)
                dens.append(ell)
    return np.array(nums, dtype=np.int64), np.array(dens, dtype=np.int64)


def farey_spacing_audit(D: int, Q: int) -> FareyAudit:
    """Check ||j/l - r/t|| >= 1/(l t) >= 1/(DQ) over all distinct reduced pairs.

    Integer form: with dist = min(m, lt - m), m = (jt - rl) mod lt, the
    gap is dist/(lt). ``min_scaled_gap`` is the least value of
    ||alpha|| * D * Q over distinct pairs.
    """
    if not 1 <= D <= Q:
        raise DomainError(f"farey_spacing_audit() needs 1 <= D <= Q, got D={D}, Q={Q}")
    audit = FareyAudit(D=D, Q=Q)
    J, L = farey_fractions(Q)
    R, T = farey_fractions(D)
    best: Fraction | None = None
    for r, t in zip(R.tolist(), T.tolist()):
        modulus = L * t
        m = (J * t - r * L) % modulus
        dist = np.minimum(m, modulus - m)
        distinct = dist != 0
        audit.pairs_checked += int(distinct.sum())
        # ||alpha|| >= 1/(l t) and ||alpha|| >= 1/(D Q)
        bad = distinct & ((dist < 1) | (dist * D * Q < modulus))
        for idx in np.flatnonzero(bad):
            audit.violations.append(FareyPair(int(J[idx]), int(L[idx]), r, t))
        if distinct.any():
            scaled = dist[distinct] * (D * Q) / modulus[distinct]
            idx = int(np.argmin(scaled))
            candidate = Fraction(int(dist[distinct][idx]) * D * Q, int(modulus[distinct][idx]))
            if best is None or candidate < best:
                best = candidate
    audit.min_scaled_gap = best
    return audit


def bounded_geometric_sum(alpha: Rational, N: int) -> complex:
    """sum_{x=N+1}^{2N} e(alpha x) in closed form; N when alpha is an integer.

    Phases are reduced mod 1 in exact arithmetic before any float is
    taken, so large N does not degrade the result.
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    a = as_fraction(alpha)
    if a.denominator == 1:
        return complex(N)

    def e(frac: Fraction) -> complex:
        return cmath.exp(2j * math.pi * float(frac - math.floor(frac)))

    whole = math.floor(a)
    # sin(pi a) = (-1)^floor(a) sin(pi frac(a))
    sin_term = (-1) ** (whole % 2) * math.sin(math.pi * float(a - whole))
    return e(a / 2) * (e(2 * N * a) - e(N * a)) / (2j * sin_term)
