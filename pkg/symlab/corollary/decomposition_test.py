"""Unit tests for the first-large-factor decomposition."""

from __future__ import annotations

import itertools
import math

import pytest

from symlab.corollary.decomposition import (
    DecompositionParams,
    decompose_dk_symmetry_sum,
    signed_multiple_counts,
)
from symlab.errors import DomainError


def ordered_tuples_sum(k: int, x: int, h: int) -> int:
    """S_k(x) by counting ordered k-tuples directly."""
    total = 0
    for n in range(x - h, x + h + 1):
        if n == x:
            continue
        sign = 1 if n > x else -1
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        count = sum(1 for t in itertools.product(divisors, repeat=k - 1) if n % math.prod(t) == 0)
        total += sign * count
    return total


class TestDecompositionParams:
    """Tests for DecompositionParams."""

    def test_threshold(self):
        """T = floor((N - h)^{1/k})."""
        assert DecompositionParams(3, 64, 2).threshold == 3
        assert DecompositionParams(4, 64, 4).threshold == 2

    def test_small_threshold_rejected(self):
        """T < 2 is rejected."""
        with pytest.raises(DomainError):
            DecompositionParams(3, 8, 2)

    def test_k_too_small(self):
        """The decomposition starts at k = 3."""
        with pytest.raises(DomainError):
            DecompositionParams(2, 64, 2)

    def test_q_bounds(self):
        """q_eff and q_max bracket the admissible cofactors."""
        p = DecompositionParams(3, 64, 2)
        assert p.q_eff(70) == 68 // 3
        assert p.q_max(70) == 72 // 3


class TestSignedMultipleCounts:
    """Tests for signed_multiple_counts()."""

    def test_against_definition(self):
        """Closed-form counts agree with enumeration."""
        x, h, T = 101, 6, 4
        counts = signed_multiple_counts(x, h, T, 40)
        for q in range(1, 41):
            expected = sum(
                (1 if m * q > x else -1 if m * q < x else 0)
                for m in range(T, (x + h) // q + 1)
                if abs(m * q - x) <= h
            )
            assert counts[q - 1] == expected


class TestDecomposeDkSymmetrySum:
    """Tests for decompose_dk_symmetry_sum()."""

    def test_example(self):
        """k = 3, N = 64, h = 2, x = 70."""
        result = decompose_dk_symmetry_sum(DecompositionParams(3, 64, 2), 70)
        assert result.direct == result.decomposed == ordered_tuples_sum(3, 70, 2)
        assert len(result.per_j) == 3

    def test_full_range_h1(self):
        """k = 3, h = 1, every x in [64, 128)."""
        params = DecompositionParams(3, 64, 1)
        assert all(decompose_dk_symmetry_sum(params, x).matches for x in range(64, 128))

    @pytest.mark.parametrize("k", [3, 4])
    @pytest.mark.parametrize("N", [64, 128, 256])
    @pytest.mark.parametrize("h", [1, 2, 4])
    def test_partition_grid(self, k, N, h):
        """direct = decomposed at every x in [N, 2N)."""
        params = DecompositionParams(k, N, h)
        for x in range(N, 2 * N):
            assert decompose_dk_symmetry_sum(params, x).matches

    def test_x_out_of_range(self):
        """x must lie in [N, 2N)."""
        with pytest.raises(DomainError):
            decompose_dk_symmetry_sum(DecompositionParams(3, 64, 2), 128)
