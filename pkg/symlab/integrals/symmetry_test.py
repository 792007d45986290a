"""Unit tests for symmetry sums and integrals."""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symlab.arith.sieves import sieve_divisor_k
from symlab.arith.tables import FunctionTable
from symlab.errors import DomainError, TableRangeError
from symlab.integrals.symmetry import (
    inequality_one_check,
    mixed_symmetry_integral,
    quadrature_symmetry_integral,
    symmetry_integral,
    symmetry_sum,
)


def random_pair(rng: np.random.Generator, limit: int = 500) -> tuple[FunctionTable, FunctionTable]:
    f = FunctionTable.from_values(rng.integers(-20, 21, size=limit).tolist(), label="f")
    f1 = FunctionTable.from_values(rng.integers(0, 30, size=limit).tolist(), label="f1")
    return f, f1


class TestSymmetrySum:
    """Tests for symmetry_sum()."""

    def test_constant_cancels(self):
        """A constant f has zero symmetry sum."""
        f = FunctionTable.constant(50, 7)
        assert all(symmetry_sum(f, x, 4) == 0 for x in range(5, 46))

    def test_divisor_example(self):
        """d(11) + d(12) - d(8) - d(9) = 1."""
        assert symmetry_sum(sieve_divisor_k(2, 20), 10, 2) == 1

    def test_dashed_example(self):
        """S(5) - d(5) + d(4) = 2 for h = 1."""
        assert symmetry_sum(sieve_divisor_k(2, 20), 5, 1, dashed=True) == 2

    def test_window_outside_table(self):
        """x + h beyond the table is a TableRangeError."""
        with pytest.raises(TableRangeError):
            symmetry_sum(sieve_divisor_k(2, 20), 19, 2)

    def test_x_not_above_h(self):
        """x <= h is rejected."""
        with pytest.raises(DomainError):
            symmetry_sum(sieve_divisor_k(2, 20), 2, 2)


class TestSymmetryIntegral:
    """Tests for symmetry_integral() and mixed_symmetry_integral()."""

    def test_constant_vanishes(self):
        """f = c gives 0 in both modes."""
        f = FunctionTable.constant(100, 3)
        assert symmetry_integral(f, 20, 5, "discrete").value == 0
        assert symmetry_integral(f, 20, 5, "continuous").value == 0

    def test_divisor_discrete(self):
        """f = d, N = 4, h = 1: S = 0, 1, 0, 0."""
        assert symmetry_integral(sieve_divisor_k(2, 10), 4, 1, "discrete").value == 1

    def test_divisor_continuous(self):
        """f = d, N = 4, h = 1: interval values -1, 2, -2, 2."""
        assert symmetry_integral(sieve_divisor_k(2, 10), 4, 1, "continuous").value == 13

    def test_table_too_short(self):
        """The table must reach 2N - 1 + h."""
        with pytest.raises(TableRangeError):
            symmetry_integral(sieve_divisor_k(2, 10), 5, 2)

    def test_unknown_mode(self):
        """Only discrete and continuous exist."""
        with pytest.raises(DomainError):
            symmetry_integral(sieve_divisor_k(2, 10), 4, 1, "midpoint")

    def test_mixed_with_itself(self):
        """I_{f,f} = I_f."""
        d = sieve_divisor_k(3, 300)
        for mode in ("discrete", "continuous"):
            assert mixed_symmetry_integral(d, d, 100, 7, mode).value == symmetry_integral(d, 100, 7, mode).value

    def test_mixed_is_symmetric(self):
        """Swapping f and f1 leaves the value unchanged."""
        f, f1 = random_pair(np.random.default_rng(3))
        assert (
            mixed_symmetry_integral(f, f1, 120, 6).value
            == mixed_symmetry_integral(f1, f, 120, 6).value
        )

    def test_constant_partner_continuous(self):
        """A constant f1 has zero corrected sums, so I_{d,1} = 0."""
        d = sieve_divisor_k(2, 200)
        one = FunctionTable.constant(200, 1)
        assert mixed_symmetry_integral(d, one, 60, 9, "continuous").value == 0

    def test_rational_table(self):
        """Rational tables integrate exactly."""
        f = FunctionTable.from_values([Fraction(n % 3, 2) for n in range(1, 41)])
        value = symmetry_integral(f, 10, 2, "discrete").value
        assert isinstance(value, (int, Fraction))
        assert value >= 0

    def test_report_json(self):
        """to_dict() encodes the value as num/den."""
        report = symmetry_integral(sieve_divisor_k(2, 10), 4, 1, "continuous")
        data = json.loads(json.dumps(report.to_dict()))
        assert data["value"] == "13/1"
        assert data["mode"] == "continuous"
        assert data["f_label"] == "d2"


class TestIntegralIdentities:
    """Seeded random checks of the algebraic identities."""

    @pytest.mark.parametrize("mode", ["discrete", "continuous"])
    def test_expansion_and_cauchy_schwarz(self, mode):
        """I_{f-f1} = I_f - 2 I_{f,f1} + I_{f1} and I_{f,f1}^2 <= I_f I_{f1} on 100 pairs."""
        rng = np.random.default_rng(2024)
        for _ in range(100):
            f, f1 = random_pair(rng)
            h = int(rng.integers(1, 11))
            N = int(rng.integers(h + 1, (500 - h + 1) // 2 + 1))
            check = inequality_one_check(f, f1, N, h, mode)
            assert check.identity_holds
            assert check.inequality_holds
            assert check.cauchy_schwarz_holds

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(-50, 50), min_size=40, max_size=40),
        st.lists(st.integers(-50, 50), min_size=40, max_size=40),
        st.integers(1, 5),
    )
    def test_inequality_one(self, a, b, h):
        """I_f >= 2 I_{f,f1} - I_{f1} for arbitrary small tables."""
        f = FunctionTable.from_values(a)
        f1 = FunctionTable.from_values(b)
        N = (40 - h + 1) // 2
        for mode in ("discrete", "continuous"):
            assert inequality_one_check(f, f1, N, h, mode).inequality_holds


class TestQuadrature:
    """Cross-validation of the continuous closed form."""

    @pytest.mark.parametrize("N,h", [(10, 1), (50, 3), (200, 12)])
    def test_matches_closed_form(self, N, h):
        """scipy quadrature agrees to 1e-6 relative."""
        d = sieve_divisor_k(3, 2 * N + h)
        exact = float(symmetry_integral(d, N, h, "continuous").value)
        assert quadrature_symmetry_integral(d, None, N, h) == pytest.approx(exact, rel=1e-6)

    def test_mixed_matches_closed_form(self):
        """Quadrature of the mixed integrand agrees too."""
        f, f1 = random_pair(np.random.default_rng(11))
        exact = float(mixed_symmetry_integral(f, f1, 150, 8, "continuous").value)
        assert quadrature_symmetry_integral(f, f1, 150, 8) == pytest.approx(exact, rel=1e-6, abs=1e-6)
