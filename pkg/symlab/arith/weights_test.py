"""Unit tests for SieveWeights and Ramanujan coefficients."""

from __future__ import annotations

import math
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from symlab.arith.sieves import sieve_divisor_k
from symlab.arith.weights import SieveWeights, convolve_with_unit, ramanujan_coefficient
from symlab.errors import DomainError, WeightsError


class TestSieveWeights:
    """Tests for constructing SieveWeights."""

    def test_constant(self):
        """constant() fills the support and zero beyond it."""
        g = SieveWeights.constant(4)
        assert g(1) == g(4) == 1
        assert g(5) == 0
        assert g.essential_bound == 1

    def test_bound_defaults_to_peak(self):
        """The essential bound defaults to max |g|."""
        g = SieveWeights.from_mapping({1: 1, 2: -5})
        assert g.essential_bound == 5

    def test_explicit_bound_enforced(self):
        """Coefficients above an explicit bound are rejected."""
        with pytest.raises(WeightsError):
            SieveWeights.from_mapping({1: 3}, essential_bound=2)

    def test_theorem_mode_needs_g_at_least_one(self):
        """Theorem-mode weights must be >= 1 on the support."""
        with pytest.raises(WeightsError):
            SieveWeights.from_mapping({1: 1, 3: 1}, theorem_mode=True)
        assert SieveWeights.constant(3, theorem_mode=True).theorem_mode

    def test_bad_argument(self):
        """q = 0 is outside the domain."""
        with pytest.raises(DomainError):
            SieveWeights.delta()(0)

    def test_monotone_on_multiples(self):
        """g(l q) >= g(q) is detected."""
        assert SieveWeights.constant(6).is_monotone_on_multiples()
        assert not SieveWeights.from_mapping({1: 2, 2: 1}).is_monotone_on_multiples()

    def test_csv(self):
        """Weights survive the q,numerator,denominator form."""
        g = SieveWeights.from_mapping({1: 1, 2: Fraction(5, 3), 4: 2}, label="w")
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "w.csv"
            g.to_csv(path)
            lines = path.read_text().splitlines()
            assert lines[0] == "q,numerator,denominator"
            assert lines[2] == "2,5,3"
            back = SieveWeights.from_csv(path)
            assert back.coeffs == g.coeffs

    def test_csv_zero_denominator(self):
        """A zero denominator in a weights file is rejected."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "w.csv"
            path.write_text("q,numerator,denominator\n1,1,0\n")
            with pytest.raises(WeightsError):
                SieveWeights.from_csv(path)


class TestConvolveWithUnit:
    """Tests for convolve_with_unit()."""

    def test_delta_gives_one(self):
        """delta_1 * 1 = 1."""
        assert set(convolve_with_unit(SieveWeights.delta(), 40).as_list()) == {1}

    def test_full_support_gives_divisor_count(self):
        """g = 1 on [1, Q] gives d(n) for n <= Q."""
        f = convolve_with_unit(SieveWeights.constant(60), 60)
        assert f.as_list() == sieve_divisor_k(2, 60).as_list()

    def test_two_point_weights(self):
        """g(1) = 1, g(2) = 5 gives f(4) = 6."""
        g = SieveWeights.from_mapping({1: 1, 2: 5})
        assert convolve_with_unit(g, 4)[4] == 6

    def test_truncated_support(self):
        """Divisors above the support are dropped."""
        f = convolve_with_unit(SieveWeights.constant(3), 12)
        assert f[12] == 3

    def test_rational_weights(self):
        """Rational weights give exact rational values."""
        g = SieveWeights.from_mapping({1: Fraction(1, 2), 3: Fraction(1, 3)})
        assert convolve_with_unit(g, 6)[6] == Fraction(5, 6)


class TestRamanujanCoefficient:
    """Tests for ramanujan_coefficient()."""

    def test_delta(self):
        """R_2(1) = 0."""
        assert ramanujan_coefficient(SieveWeights.delta(), 2) == 0

    def test_constant_weights(self):
        """g = 1 on [1, 4]: R_2 = 3/4 and R_1 = 25/12."""
        g = SieveWeights.constant(4)
        assert ramanujan_coefficient(g, 2) == Fraction(3, 4)
        assert ramanujan_coefficient(g, 1) == Fraction(25, 12)

    def test_beyond_support(self):
        """R_l = 0 once l > Q."""
        assert ramanujan_coefficient(SieveWeights.constant(4), 5) == 0

    def test_decay_bound(self):
        """|R_l| <= B (1 + ln(Q/l)) / l for every l <= Q."""
        g = SieveWeights.from_mapping({q: (-1) ** q * Fraction(q % 5 + 1, 2) for q in range(1, 201)})
        bound = float(g.essential_bound)
        for ell in range(1, g.support + 1):
            r = abs(float(ramanujan_coefficient(g, ell)))
            assert r <= bound * (1 + math.log(g.support / ell)) / ell + 1e-12
