"""Unit tests for the growth audit and the harmonic divisor sums."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from symlab.corollary.growth import (
    GrowthPoint,
    corollary_growth_ratio,
    divisor_harmonic_lower_check,
    divisor_harmonic_sweep,
    growth_non_degradation,
    growth_width,
)
from symlab.errors import DomainError, HypothesisViolation


def point(N: int, rho: float) -> GrowthPoint:
    return GrowthPoint(k=3, theta=Fraction(1, 4), N=N, h=2, I_dk=1, J_k=1.0, rho_I=rho, rho_J=rho)


class TestGrowthWidth:
    """Tests for growth_width()."""

    def test_exact_width(self):
        """h = floor(2^16 ^ 1/4) = 16."""
        assert growth_width(3, Fraction(1, 4), 2 ** 16) == 16

    def test_theta_at_one_over_k(self):
        """theta >= 1/k violates the corollary hypothesis."""
        with pytest.raises(HypothesisViolation) as exc:
            growth_width(3, Fraction(1, 3), 2 ** 12)
        assert "θ<1/k" in str(exc.value)

    def test_width_too_small(self):
        """h must be at least 2."""
        with pytest.raises(DomainError):
            growth_width(3, Fraction(1, 4), 10)


class TestCorollaryGrowthRatio:
    """Tests for corollary_growth_ratio()."""

    def test_positive(self):
        """rho_I and rho_J are positive."""
        p = corollary_growth_ratio(3, Fraction(1, 4), 2 ** 12)
        assert p.h == 8
        assert p.rho_I > 0
        assert p.rho_J > 0
        assert p.runtime_ms is None

    def test_normalisation(self):
        """rho_I = I / (N h log(N)^{k+1})."""
        p = corollary_growth_ratio(3, Fraction(1, 4), 2 ** 12)
        assert p.rho_I == pytest.approx(p.I_dk / (p.N * p.h * math.log(p.N) ** 4))

    def test_timing_recorded_on_request(self):
        """runtime_ms is filled only when asked."""
        p = corollary_growth_ratio(3, Fraction(1, 5), 2 ** 10, record_timing=True)
        assert p.runtime_ms is not None and p.runtime_ms >= 0

    def test_row_columns(self):
        """to_row() follows the growth CSV schema."""
        row = corollary_growth_ratio(3, Fraction(1, 4), 2 ** 12).to_row()
        assert list(row) == [
            "k", "theta_num", "theta_den", "N", "h", "I_dk", "J_k", "rho_I", "rho_J", "runtime_ms",
        ]
        assert (row["theta_num"], row["theta_den"]) == (1, 4)

    def test_k_too_small(self):
        """k = 2 is outside the corollary."""
        with pytest.raises(DomainError):
            corollary_growth_ratio(2, Fraction(1, 4), 2 ** 12)


class TestGrowthNonDegradation:
    """Tests for growth_non_degradation()."""

    def test_holds(self):
        """A flat profile passes."""
        points = [point(2 ** n, 0.3) for n in range(14, 21)]
        result = growth_non_degradation(points)
        assert result.holds
        assert result.min_top == result.min_bottom == 0.3

    def test_degrades(self):
        """A collapse below half the early minimum fails."""
        points = [point(2 ** n, 1.0 if n < 18 else 0.4) for n in range(14, 21)]
        assert not growth_non_degradation(points).holds

    def test_order_independent(self):
        """Points are sorted by N first."""
        points = [point(2 ** n, float(n)) for n in (20, 14, 17, 15, 19, 16, 18)]
        result = growth_non_degradation(points)
        assert result.min_bottom == 14.0
        assert result.min_top == 18.0

    def test_too_few_points(self):
        """At least three points are needed."""
        with pytest.raises(DomainError):
            growth_non_degradation([point(64, 1.0)])


class TestDivisorHarmonic:
    """Tests for the harmonic divisor sums."""

    def test_k2(self):
        """k = 2 gives the harmonic number against log x."""
        check = divisor_harmonic_lower_check(2, 10)
        assert check.sum == pytest.approx(sum(1 / n for n in range(1, 11)))
        assert check.floor_bound == pytest.approx(math.log(10))
        assert check.holds

    def test_k3(self):
        """k = 3, x = 10: sum d(n)/n = 6.00238... against (log 10 / 2)^2."""
        check = divisor_harmonic_lower_check(3, 10)
        assert check.sum == pytest.approx(6.002381, abs=1e-6)
        assert check.holds

    def test_smallest_x(self):
        """k = 2, x = 2: 3/2 >= log 2."""
        check = divisor_harmonic_lower_check(2, 2)
        assert check.sum == pytest.approx(1.5)
        assert check.holds

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_sweep(self, k):
        """The bound holds at every x <= 10^5."""
        sweep = divisor_harmonic_sweep(k, 10 ** 5)
        assert sweep.holds
        assert 2 <= sweep.worst_x <= 10 ** 5

    def test_sweep_agrees_with_single_check(self):
        """The cumulative sweep matches the single-x computation."""
        sweep = divisor_harmonic_sweep(3, 50)
        single = divisor_harmonic_lower_check(3, sweep.worst_x)
        assert sweep.min_margin == pytest.approx(single.sum - single.floor_bound)
