"""Sieves for mu and the k-fold divisor functions."""

from __future__ import annotations

import numpy as np

from symlab.arith.tables import FunctionTable, convolve_arrays
from symlab.errors import DomainError


def sieve_mobius(limit: int) -> FunctionTable:
    """Return mu(n) for n <= limit via the linear sieve.

    Every composite is crossed out exactly once, by its least prime factor,
    so mu(i*p) is either 0 (p | i) or -mu(i).
    """
    if limit < 1:
        raise DomainError(f"sieve_mobius() needs limit >= 1, got {limit}")
    mu = [0] * (limit + 1)
    mu[1] = 1
    composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return FunctionTable(limit=limit, values=np.array(mu, dtype=np.int64), label="mu")


def sieve_divisor_k(k: int, limit: int, failover: bool = True) -> FunctionTable:
    """Return d_k(n) for n <= limit as the (k-1)-fold convolution of 1 with 1.

    Values stay int64 while the divisor bound allows it and fail over to
    Python ints beyond that; with ``failover=False`` an overflow raises
    ArithmeticOverflowError instead.
    """
    if k < 1:
        raise DomainError(f"sieve_divisor_k() needs k >= 1, got {k}")
    if limit < 1:
        raise DomainError(f"sieve_divisor_k() needs limit >= 1, got {limit}")
    ones = np.ones(limit + 1, dtype=np.int64)
    ones[0] = 0
    values = ones
    for _ in range(k - 1):
        values = convolve_arrays(values, ones, limit, failover=failover)
    return FunctionTable(limit=limit, values=values, label=f"d{k}")


def unit_table(limit: int) -> FunctionTable:
    """The constant function 1 on [1, limit]."""
    return FunctionTable.constant(limit, 1, label="1")
