"""Trial-division helpers for the small moduli the identity layer touches."""

from __future__ import annotations

from functools import lru_cache

from symlab.errors import DomainError


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """Return the positive divisors of n in increasing order."""
    if n < 1:
        raise DomainError(f"divisors() needs n >= 1, got {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=65536)
def mobius_value(n: int) -> int:
    """Return mu(n) by trial division."""
    if n < 1:
        raise DomainError(f"mobius_value() needs n >= 1, got {n}")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result
