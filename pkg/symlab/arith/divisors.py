"""Restricted divisor functions d_{k-1}^{(j)} and the corollary weight.

d_{k-1}^{(j)}(q) counts ordered (k-1)-tuples with product q whose first j
entries are below a threshold T. Single values come from bounded
enumeration of ordered factorizations; whole ranges come from the
sieve-of-products builder, the Dirichlet convolution of j copies of
1_{[1,T)} with k-1-j copies of 1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from symlab.arith.factor import divisors
from symlab.arith.tables import FunctionTable, convolve_arrays
from symlab.errors import DomainError


def _check(k_minus_1: int, j: int, threshold: int) -> None:
    if k_minus_1 < 1:
        raise DomainError(f"k-1 must be >= 1, got {k_minus_1}")
    if not 0 <= j <= k_minus_1:
        raise DomainError(f"j must lie in [0, {k_minus_1}], got {j}")
    if threshold < 1:
        raise DomainError(f"threshold must be >= 1, got {threshold}")


@lru_cache(maxsize=None)
def _count(q: int, slots: int, restricted: int, threshold: int) -> int:
    if slots == 1:
        return 1 if restricted == 0 or q < threshold else 0
    total = 0
    for d in divisors(q):
        if restricted and d >= threshold:
            break
        total += _count(q // d, slots - 1, max(restricted - 1, 0), threshold)
    return total


def restricted_divisor_count(k_minus_1: int, j: int, q: int, threshold: int) -> int:
    """Number of ordered ``k_minus_1``-tuples with product q, first j entries < threshold."""
    _check(k_minus_1, j, threshold)
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    return _count(q, k_minus_1, j, threshold)


def restricted_divisor_table(
    k_minus_1: int, j: int, limit: int, threshold: int
) -> FunctionTable:
    """d_{k-1}^{(j)}(q) for every q <= limit."""
    _check(k_minus_1, j, threshold)
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    ones = np.ones(limit + 1, dtype=np.int64)
    ones[0] = 0
    low = ones.copy()
    low[threshold:] = 0
    factors = [low] * j + [ones] * (k_minus_1 - j)
    values = factors[0]
    for factor in factors[1:]:
        values = convolve_arrays(values, factor, limit)
    return FunctionTable(limit=limit, values=values, label=f"d{k_minus_1}^({j})")


def corollary_weight(k: int, q: int, threshold: int) -> int:
    """Return sum_{j=0}^{k-1} d_{k-1}^{(j)}(q), which lies in [1, k*d_{k-1}(q)]."""
    if k < 3:
        raise DomainError(f"corollary_weight() needs k >= 3, got {k}")
    return sum(restricted_divisor_count(k - 1, j, q, threshold) for j in range(k))


def corollary_weight_table(k: int, limit: int, threshold: int) -> FunctionTable:
    """corollary_weight(k, q, threshold) for every q <= limit."""
    if k < 3:
        raise DomainError(f"corollary_weight_table() needs k >= 3, got {k}")
    total = np.zeros(limit + 1, dtype=object)
    for j in range(k):
        total = total + restricted_divisor_table(k - 1, j, limit, threshold).values.astype(object)
    return FunctionTable(limit=limit, values=total, label=f"g{k}")
