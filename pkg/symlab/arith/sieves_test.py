"""Unit tests for the mu and d_k sieves."""

from __future__ import annotations

import math
from itertools import product

import pytest

from symlab.arith.factor import divisors, mobius_value
from symlab.arith.sieves import sieve_divisor_k, sieve_mobius
from symlab.errors import DomainError

PRIMES = [2, 3, 5, 7, 11, 13, 97, 101]


def ordered_factorizations(n: int, k: int) -> int:
    """Count (a_1, ..., a_k) with a_1 ... a_k = n by brute force."""
    return sum(1 for head in product(divisors(n), repeat=k - 1) if n % math.prod(head) == 0)


class TestSieveMobius:
    """Tests for sieve_mobius()."""

    def test_small_values(self):
        """mu(1) = 1, mu(4) = 0, mu(6) = 1."""
        mu = sieve_mobius(10)
        assert mu[1] == 1
        assert mu[4] == 0
        assert mu[6] == 1

    def test_values_in_range(self):
        """mu takes values in {-1, 0, 1}."""
        mu = sieve_mobius(5000)
        assert set(mu.as_list()) == {-1, 0, 1}

    def test_matches_trial_division(self):
        """The sieve agrees with factoring each n."""
        mu = sieve_mobius(2000)
        assert all(mu[n] == mobius_value(n) for n in range(1, 2001))

    def test_zero_limit_rejected(self):
        """limit = 0 is outside the domain."""
        with pytest.raises(DomainError):
            sieve_mobius(0)


class TestSieveDivisorK:
    """Tests for sieve_divisor_k()."""

    @pytest.mark.parametrize("k, limit", [(1, 120), (2, 120), (3, 120), (4, 120), (5, 48)])
    def test_counts_ordered_factorizations(self, k, limit):
        """d_k(n) is the number of ordered k-tuples with product n."""
        table = sieve_divisor_k(k, limit)
        assert table.as_list() == [ordered_factorizations(n, k) for n in range(1, limit + 1)]

    def test_small_values(self):
        """d_k(1) = 1, d_3(4) = 6, d_2(6) = 4."""
        assert sieve_divisor_k(4, 10)[1] == 1
        assert sieve_divisor_k(3, 10)[4] == 6
        assert sieve_divisor_k(2, 10)[6] == 4

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_primes_take_value_k(self, k):
        """d_k(p) = k."""
        table = sieve_divisor_k(k, 101)
        assert all(table[p] == k for p in PRIMES)

    def test_d1_is_constant(self):
        """d_1 is the constant 1."""
        assert set(sieve_divisor_k(1, 50).as_list()) == {1}

    def test_d2_counts_divisors(self):
        """d_2(n) is the number of divisors of n."""
        d = sieve_divisor_k(2, 500)
        assert all(d[n] == len(divisors(n)) for n in range(1, 501))

    def test_no_failover_small(self):
        """Desk-scale tables stay int64 even without failover."""
        table = sieve_divisor_k(3, 10 ** 4, failover=False)
        assert not table.is_wide

    def test_bad_k(self):
        """k = 0 is rejected."""
        with pytest.raises(DomainError):
            sieve_divisor_k(0, 10)
