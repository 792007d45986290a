"""Unit tests for FunctionTable and Dirichlet convolution."""

from __future__ import annotations

import tempfile
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from symlab.arith.sieves import sieve_divisor_k, sieve_mobius, unit_table
from symlab.arith.tables import FunctionTable, convolve_arrays, dirichlet_convolve
from symlab.errors import ArithmeticOverflowError, DomainError, MalformedFileError, TableRangeError


class TestFunctionTable:
    """Tests for FunctionTable construction and access."""

    def test_from_values(self):
        """Values are indexed from 1."""
        t = FunctionTable.from_values([5, 6, 7], label="x")
        assert t.limit == 3
        assert t[1] == 5 and t[3] == 7

    def test_out_of_range(self):
        """Indexing outside [1, limit] raises TableRangeError."""
        t = FunctionTable.constant(4)
        with pytest.raises(TableRangeError):
            t[0]
        with pytest.raises(TableRangeError):
            t[5]

    def test_zero_limit_rejected(self):
        """A table must cover at least n = 1."""
        with pytest.raises(DomainError):
            FunctionTable.constant(0)

    def test_values_are_frozen(self):
        """The value array cannot be written after construction."""
        t = FunctionTable.constant(4)
        with pytest.raises(ValueError):
            t.values[1] = 9

    def test_prefix_sums(self):
        """P[n] is the running total with P[0] = 0."""
        t = FunctionTable.from_values([1, 2, 3, 4])
        assert t.prefix_sums.tolist() == [0, 1, 3, 6, 10]

    def test_rational_values(self):
        """Fractions are kept exactly."""
        t = FunctionTable.from_values([Fraction(1, 2), 1])
        assert t[1] == Fraction(1, 2)
        assert t.is_wide

    def test_difference(self):
        """difference() subtracts pointwise over the common range."""
        a = FunctionTable.from_values([3, 4, 5])
        b = FunctionTable.from_values([1, 1])
        diff = a.difference(b)
        assert diff.limit == 2
        assert diff.as_list() == [2, 3]

    def test_shifted(self):
        """shifted() adds a constant at every n."""
        t = FunctionTable.from_values([1, 2]).shifted(3)
        assert t.as_list() == [4, 5]


class TestTableCsv:
    """Tests for the n,value CSV form."""

    def test_write_and_read(self):
        """A written table reads back with identical values."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "d3.csv"
            sieve_divisor_k(3, 50).to_csv(path)
            assert path.read_text().splitlines()[0] == "n,value"
            back = FunctionTable.from_csv(path)
            assert back.as_list() == sieve_divisor_k(3, 50).as_list()
            assert back.label == "d3"

    def test_rational_cells(self):
        """Rational values are written as num/den."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "r.csv"
            FunctionTable.from_values([Fraction(2, 3), 4]).to_csv(path)
            assert path.read_text().splitlines()[1] == "1,2/3"
            assert FunctionTable.from_csv(path)[1] == Fraction(2, 3)

    def test_gap_rejected(self):
        """Rows must cover every n up to the largest one."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "gap.csv"
            path.write_text("n,value\n1,1\n3,1\n")
            with pytest.raises(DomainError):
                FunctionTable.from_csv(path)

    @pytest.mark.parametrize("text", ["n,value\n1,1\n2,two\n", "n,value\n1,1\n2\n", "q,value\n1,1\n", "n,value\n1,1/0\n"])
    def test_malformed_rejected(self, text):
        """Bad headers and unparsable cells raise MalformedFileError."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "bad.csv"
            path.write_text(text)
            with pytest.raises(MalformedFileError):
                FunctionTable.from_csv(path)


class TestDirichletConvolve:
    """Tests for dirichlet_convolve()."""

    def test_unit_with_unit_is_divisor_count(self):
        """1*1 = d."""
        d = dirichlet_convolve(unit_table(100), unit_table(100))
        assert d.as_list() == sieve_divisor_k(2, 100).as_list()
        assert d[12] == 6

    def test_mobius_inverts_unit(self):
        """mu*1 = [n = 1] for every n <= 10^5."""
        limit = 10 ** 5
        e = dirichlet_convolve(sieve_mobius(limit), unit_table(limit))
        expected = np.zeros(limit + 1, dtype=np.int64)
        expected[1] = 1
        assert np.array_equal(e.values, expected)

    def test_against_naive(self):
        """Random tables agree with the definition."""
        rng = np.random.default_rng(7)
        a = FunctionTable.from_values(rng.integers(-5, 6, size=60).tolist())
        b = FunctionTable.from_values(rng.integers(-5, 6, size=60).tolist())
        c = dirichlet_convolve(a, b)
        for n in range(1, 61):
            naive = sum(a[d] * b[n // d] for d in range(1, n + 1) if n % d == 0)
            assert c[n] == naive

    def test_failover_to_wide(self):
        """Huge values move to Python ints rather than wrapping."""
        big = FunctionTable.from_values([2 ** 40] * 16)
        c = dirichlet_convolve(big, big)
        assert c.is_wide
        assert c[16] == 5 * 2 ** 80

    def test_overflow_raises_without_failover(self):
        """With failover disabled the overflow is reported."""
        big = FunctionTable.from_values([2 ** 40] * 16)
        with pytest.raises(ArithmeticOverflowError):
            dirichlet_convolve(big, big, failover=False)

    def test_limit_beyond_table(self):
        """A limit beyond either table is rejected."""
        with pytest.raises(TableRangeError):
            dirichlet_convolve(unit_table(10), unit_table(5), limit=8)

    def test_rational_arrays(self):
        """Object arrays of Fractions convolve exactly."""
        a = np.array([0, Fraction(1, 2), Fraction(1, 3)], dtype=object)
        b = np.array([0, 1, 1], dtype=object)
        out = convolve_arrays(a, b, 2)
        assert out[2] == Fraction(5, 6)
