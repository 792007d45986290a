"""Unit tests for Farey spacing and the geometric sum."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symlab.arith.rational import nearest_integer_distance
from symlab.errors import DomainError
from symlab.spectral.farey import (
    FareyPair,
    bounded_geometric_sum,
    farey_fractions,
    farey_spacing_audit,
)


class TestFareyPair:
    """Tests for FareyPair."""

    def test_alpha(self):
        """alpha is j/l - r/t."""
        pair = FareyPair(1, 3, 1, 2)
        assert pair.alpha == Fraction(-1, 6)
        assert pair.gap == Fraction(1, 6)

    def test_lowest_terms_required(self):
        """2/4 is not reduced."""
        with pytest.raises(DomainError):
            FareyPair(2, 4, 1, 3)


class TestFareySpacingAudit:
    """Tests for farey_spacing_audit()."""

    def test_fraction_count(self):
        """Order 5 has 1 + 1 + 2 + 2 + 4 fractions in [0, 1)."""
        nums, dens = farey_fractions(5)
        assert len(nums) == 10
        assert dens.max() == 5

    def test_spacing_holds(self):
        """No distinct pair comes closer than 1/(l t)."""
        audit = farey_spacing_audit(12, 30)
        assert audit.holds
        assert audit.pairs_checked > 0
        assert audit.min_scaled_gap >= 1

    def test_matches_exact_fractions(self):
        """The integer form agrees with Fraction arithmetic on a small case."""
        D, Q = 4, 6
        best = None
        for j in range(Q):
            for ell in range(1, Q + 1):
                if math.gcd(j, ell) != 1 or j >= ell:
                    continue
                for r in range(D):
                    for t in range(1, D + 1):
                        if math.gcd(r, t) != 1 or r >= t:
                            continue
                        gap = nearest_integer_distance(Fraction(j, ell) - Fraction(r, t))
                        if gap:
                            best = gap * D * Q if best is None else min(best, gap * D * Q)
        assert farey_spacing_audit(D, Q).min_scaled_gap == best

    def test_d_above_q_rejected(self):
        """The audit needs D <= Q."""
        with pytest.raises(DomainError):
            farey_spacing_audit(5, 4)


class TestBoundedGeometricSum:
    """Tests for bounded_geometric_sum()."""

    def test_integer_alpha(self):
        """Every term is 1 when alpha is an integer."""
        assert bounded_geometric_sum(3, 17) == 17

    def test_half_even_n(self):
        """alpha = 1/2 alternates over an even count."""
        assert abs(bounded_geometric_sum(Fraction(1, 2), 10)) < 1e-12

    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=200),
        st.integers(min_value=1, max_value=300),
    )
    def test_closed_form_and_bound(self, alpha, N):
        """The closed form equals the direct sum and obeys 1/(2||alpha||)."""
        value = bounded_geometric_sum(alpha, N)
        direct = sum(
            cmath.exp(2j * math.pi * float((alpha * x) % 1)) for x in range(N + 1, 2 * N + 1)
        )
        assert abs(value - direct) < 1e-7
        if alpha.denominator != 1:
            assert abs(value) <= 1 / (2 * float(nearest_integer_distance(alpha))) + 1e-9
