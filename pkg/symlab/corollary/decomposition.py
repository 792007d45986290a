"""Decomposition of the d_k symmetry sum by the first large factor.

Let T = floor((N-h)^{1/k}). For x in [N, 2N) every n in [x-h, x+h]
exceeds T^k - 1, so each ordered k-tuple with product n has a first
entry m >= T. Splitting by its position j + 1 gives

    S_k(x) = sum_j sum_q d_{k-1}^{(j)}(q) * sum_{m >= T, |mq - x| <= h} sgn(mq - x)

where d_{k-1}^{(j)} counts the remaining k-1 entries, the first j of
them below T.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from symlab.arith.divisors import restricted_divisor_table
from symlab.arith.rational import integer_root
from symlab.arith.sieves import sieve_divisor_k
from symlab.arith.tables import FunctionTable
from symlab.errors import DomainError
from symlab.integrals.symmetry import symmetry_sum


@dataclass(frozen=True)
class DecompositionParams:
    """(k, N, h) with the derived threshold T = floor((N-h)^{1/k})."""

    k: int
    N: int
    h: int
    threshold: int = field(init=False)

    def __post_init__(self) -> None:
        if self.k < 3:
            raise DomainError(f"k must be >= 3, got {self.k}")
        if self.h < 1 or self.N <= self.h:
            raise DomainError(f"Need N > h >= 1, got N={self.N}, h={self.h}")
        threshold = integer_root(self.N - self.h, self.k)
        if threshold < 2:
            raise DomainError(
                f"threshold floor(({self.N}-{self.h})^(1/{self.k})) = {threshold} is below 2"
            )
        object.__setattr__(self, "threshold", threshold)

    @property
    def limit(self) -> int:
        """Largest n any window [x-h, x+h] with x < 2N reaches."""
        return 2 * self.N - 1 + self.h

    def q_eff(self, x: int) -> int:
        """floor((x - h) / T)."""
        return (x - self.h) // self.threshold

    def q_max(self, x: int) -> int:
        """floor((x + h) / T), the last q with an admissible m."""
        return (x + self.h) // self.threshold


@dataclass(frozen=True)
class DecompositionResult:
    x: int
    direct: int
    decomposed: int
    per_j: tuple[int, ...]

    @property
    def matches(self) -> bool:
        return self.direct == self.decomposed


@lru_cache(maxsize=16)
def _tables(params: DecompositionParams) -> tuple[FunctionTable, tuple[np.ndarray, ...]]:
    dk = sieve_divisor_k(params.k, params.limit)
    top = max(1, params.limit // params.threshold)
    restricted = tuple(
        restricted_divisor_table(params.k - 1, j, top, params.threshold).values.astype(object)
        for j in range(params.k)
    )
    return dk, restricted


def signed_multiple_counts(x: int, h: int, threshold: int, q_top: int) -> np.ndarray:
    """For q = 1..q_top: sum of sgn(mq - x) over m >= threshold with |mq - x| <= h."""
    qs = np.arange(1, q_top + 1, dtype=np.int64)
    right_lo = np.maximum(threshold, x // qs + 1)
    right_hi = (x + h) // qs
    left_lo = np.maximum(threshold, -((h - x) // qs))
    left_hi = (x - 1) // qs
    right = np.maximum(right_hi - right_lo + 1, 0)
    left = np.maximum(left_hi - left_lo + 1, 0)
    return right - left


def decompose_dk_symmetry_sum(params: DecompositionParams, x: int) -> DecompositionResult:
    """S_k(x) directly from the d_k table and through the restricted weights."""
    if not params.N <= x < 2 * params.N:
        raise DomainError(f"x must lie in [{params.N}, {2 * params.N}), got {x}")
    dk, restricted = _tables(params)
    direct = int(symmetry_sum(dk, x, params.h))
    q_top = params.q_max(x)
    counts = signed_multiple_counts(x, params.h, params.threshold, q_top).astype(object)
    per_j = tuple(int(np.dot(table[1 : q_top + 1], counts)) for table in restricted)
    return DecompositionResult(x=x, direct=direct, decomposed=sum(per_j), per_j=per_j)
