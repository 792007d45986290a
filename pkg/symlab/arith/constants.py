"""The analytic constants the identity layer consumes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from symlab.arith.factor import divisors, mobius_value
from symlab.arith.rational import nearest_integer_distance
from symlab.arith.sieves import sieve_mobius
from symlab.errors import DomainError

INVERSE_ZETA_2 = 6 / math.pi ** 2


@dataclass(frozen=True)
class MobiusSquareSum:
    """Exact partial sum of mu(t)/t^2 up to T and its distance to 6/pi^2."""

    T: int
    value: Fraction
    deviation: float

    @property
    def within_tail_bound(self) -> bool:
        return self.deviation <= 1 / self.T


def mobius_square_partial_sum(T: int) -> MobiusSquareSum:
    """Return sum_{t <= T} mu(t)/t^2 exactly, plus |sum - 6/pi^2| as a float."""
    if T < 1:
        raise DomainError(f"T must be >= 1, got {T}")
    mu = sieve_mobius(T).values.tolist()
    value = sum((Fraction(mu[t], t * t) for t in range(1, T + 1) if mu[t]), Fraction(0))
    return MobiusSquareSum(T=T, value=value, deviation=abs(float(value) - INVERSE_ZETA_2))


def mobius_square_deviations(T_max: int) -> np.ndarray:
    """|sum_{t<=T} mu(t)/t^2 - 6/pi^2| for T = 1..T_max (index T-1), in float64."""
    if T_max < 1:
        raise DomainError(f"T_max must be >= 1, got {T_max}")
    mu = sieve_mobius(T_max).values[1:].astype(np.float64)
    t = np.arange(1, T_max + 1, dtype=np.float64)
    return np.abs(np.cumsum(mu / (t * t)) - INVERSE_ZETA_2)


def mobius_norm_sum(ell: int, h: int) -> Fraction:
    """Return sum_{t | ell} mu(t)/t^2 * ||h t / ell||; never negative."""
    if ell < 1:
        raise DomainError(f"ell must be >= 1, got {ell}")
    total = Fraction(0)
    for t in divisors(ell):
        mu = mobius_value(t)
        if mu:
            total += Fraction(mu, t * t) * nearest_integer_distance(Fraction(h * t, ell))
    return total
