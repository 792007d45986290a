"""SieveWeights: finitely supported coefficient sequences g with f = g*1."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping

import numpy as np

from symlab.arith.rational import Rational, as_fraction
from symlab.arith.tables import FunctionTable, convolve_arrays
from symlab.errors import DomainError, MalformedFileError, WeightsError


@dataclass(frozen=True)
class SieveWeights:
    """Coefficients g(1..support) of a level-``support`` sieve function.

    ``essential_bound`` is the explicit constant B with |g(q)| <= B. With
    ``theorem_mode`` set, construction also enforces g(q) >= 1 on the
    support.
    """

    support: int
    coeffs: tuple[Fraction, ...]
    essential_bound: Fraction | None = None
    theorem_mode: bool = False
    label: str = "g"
    _dense: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.support < 1:
            raise WeightsError(f"support must be >= 1, got {self.support}")
        if len(self.coeffs) != self.support:
            raise WeightsError(
                f"{self.label}: {len(self.coeffs)} coefficients for support {self.support}"
            )
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        peak = max(abs(c) for c in coeffs)
        bound = peak if self.essential_bound is None else as_fraction(self.essential_bound)
        if bound <= 0:
            bound = Fraction(1)
        if peak > bound:
            raise WeightsError(f"{self.label}: |g| reaches {peak} above bound {bound}")
        object.__setattr__(self, "essential_bound", bound)
        if self.theorem_mode:
            low = [q for q, c in enumerate(coeffs, start=1) if c < 1]
            if low:
                raise WeightsError(f"{self.label}: theorem mode needs g(q) >= 1, fails at q={low[0]}")
        dense = np.empty(self.support + 1, dtype=object)
        dense[0] = Fraction(0)
        dense[1:] = list(coeffs)
        dense.setflags(write=False)
        object.__setattr__(self, "_dense", dense)

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(
        cls, support: int, value: Rational = 1, theorem_mode: bool = False, label: str | None = None
    ) -> SieveWeights:
        """g = value on [1, support]."""
        v = as_fraction(value)
        return cls(
            support=support,
            coeffs=(v,) * support,
            theorem_mode=theorem_mode,
            label=label or f"const{v}[{support}]",
        )

    @classmethod
    def delta(cls, label: str = "delta1") -> SieveWeights:
        """g = delta_1, so that g*1 is the constant 1."""
        return cls(support=1, coeffs=(Fraction(1),), label=label)

    @classmethod
    def from_mapping(
        cls,
        mapping: Mapping[int, Rational],
        support: int | None = None,
        essential_bound: Rational | None = None,
        theorem_mode: bool = False,
        label: str = "g",
    ) -> SieveWeights:
        """Build weights from sparse ``{q: g(q)}`` entries (others are 0)."""
        if not mapping and support is None:
            raise WeightsError("Empty mapping needs an explicit support")
        if any(q < 1 for q in mapping):
            raise WeightsError(f"{label}: keys must be >= 1")
        top = support if support is not None else max(mapping)
        if mapping and max(mapping) > top:
            raise WeightsError(f"{label}: key {max(mapping)} beyond support {top}")
        coeffs = tuple(as_fraction(mapping.get(q, 0)) for q in range(1, top + 1))
        return cls(
            support=top,
            coeffs=coeffs,
            essential_bound=None if essential_bound is None else as_fraction(essential_bound),
            theorem_mode=theorem_mode,
            label=label,
        )

    @classmethod
    def from_table(cls, table: FunctionTable, theorem_mode: bool = False) -> SieveWeights:
        """Use the values of a FunctionTable as weights on [1, limit]."""
        return cls(
            support=table.limit,
            coeffs=tuple(as_fraction(v) for v in table.as_list()),
            theorem_mode=theorem_mode,
            label=table.label or "g",
        )

    # -- access --------------------------------------------------------------

    def __call__(self, q: int) -> Fraction:
        if q < 1:
            raise DomainError(f"{self.label}: q must be >= 1, got {q}")
        if q > self.support:
            return Fraction(0)
        return self.coeffs[q - 1]

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def dense(self, limit: int) -> np.ndarray:
        """Slot-0-unused array of g over [0, limit], zero beyond the support."""
        if self.is_integral:
            out = np.zeros(limit + 1, dtype=np.int64)
            top = min(limit, self.support)
            out[1 : top + 1] = [int(c) for c in self.coeffs[:top]]
            return out
        out = np.empty(limit + 1, dtype=object)
        out[:] = Fraction(0)
        top = min(limit, self.support)
        out[1 : top + 1] = self._dense[1 : top + 1]
        return out

    def is_monotone_on_multiples(self) -> bool:
        """True when g(l*q) >= g(q) whenever l*q lies in the support."""
        for q in range(1, self.support + 1):
            gq = self.coeffs[q - 1]
            for m in range(2 * q, self.support + 1, q):
                if self.coeffs[m - 1] < gq:
                    return False
        return True

    # -- serialization -------------------------------------------------------

    def to_csv(self, path: Path) -> Path:
        """Write ``q,numerator,denominator`` rows for q = 1..support."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["q", "numerator", "denominator"])
            for q, c in enumerate(self.coeffs, start=1):
                writer.writerow([q, c.numerator, c.denominator])
        return path

    @classmethod
    def from_csv(
        cls, path: Path, theorem_mode: bool = False, label: str | None = None
    ) -> SieveWeights:
        """Read weights written by :meth:`to_csv`; missing q are zero."""
        mapping: dict[int, Fraction] = {}
        try:
            with open(path, newline="") as f:
                for row in csv.DictReader(f):
                    den = int(row["denominator"])
                    if den == 0:
                        raise WeightsError(f"{path}: zero denominator at q={row['q']}")
                    mapping[int(row["q"])] = Fraction(int(row["numerator"]), den)
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, WeightsError):
                raise
            raise MalformedFileError(f"Malformed weights file {path}: {e}") from e
        return cls.from_mapping(
            mapping,
            theorem_mode=theorem_mode,
            label=label if label is not None else path.stem,
        )


def convolve_with_unit(g: SieveWeights, limit: int) -> FunctionTable:
    """Return f = g*1, i.e. f(n) = sum of g(d) over d | n with d <= support."""
    if limit < 1:
        raise DomainError(f"convolve_with_unit() needs limit >= 1, got {limit}")
    a = g.dense(limit)
    ones = np.ones(limit + 1, dtype=np.int64 if a.dtype != object else object)
    ones[0] = 0
    return FunctionTable(limit=limit, values=convolve_arrays(a, ones, limit), label=f"{g.label}*1")


def ramanujan_block_sum(g: SieveWeights, ell: int, bound: int) -> Fraction:
    """Return sum_{n <= bound/ell} g(ell*n)/n."""
    if ell < 1:
        raise DomainError(f"ell must be >= 1, got {ell}")
    top = min(bound, g.support) // ell
    return sum((g(ell * n) / n for n in range(1, top + 1)), Fraction(0))


def ramanujan_coefficient(g: SieveWeights, ell: int) -> Fraction:
    """Return R_ell(g*1) = (1/ell) sum_{n <= Q/ell} g(ell*n)/n; zero when ell > Q."""
    return ramanujan_block_sum(g, ell, g.support) / ell
