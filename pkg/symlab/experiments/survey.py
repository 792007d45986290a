"""Census of the window power-sum identity over a (q, h) grid.

For every 2 <= q <= q_max, 1 <= h <= h_max and both conventions the exact
power sum is compared with 2||h/q||. The dashed sums are expected to match
everywhere. The undashed sums are expected to match exactly when
2(h mod q) < q or q | h, and to fall short by exactly 2/q otherwise; the
census records every deviation from that pattern verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any

from symlab.errors import DomainError
from symlab.experiments.executor import ScanTask, make_executor
from symlab.spectral.fourier import coefficient_power_sum

SURVEY_COLUMNS = (
    "q",
    "h",
    "dashed",
    "exact_num",
    "exact_den",
    "rhs_num",
    "rhs_den",
    "mismatch",
)

_MAX_LISTED = 20


def expected_undashed_match(q: int, h: int) -> bool:
    s = h % q
    return s == 0 or 2 * s < q


def _survey_row(q: int, h: int, dashed: bool) -> dict[str, Any]:
    check = coefficient_power_sum(q, h, dashed)
    return {
        "q": q,
        "h": h,
        "dashed": dashed,
        "exact_num": check.exact.numerator,
        "exact_den": check.exact.denominator,
        "rhs_num": check.closed_form.numerator,
        "rhs_den": check.closed_form.denominator,
        "mismatch": not check.matches,
    }


def _survey_modulus(q: int, h_max: int) -> list[dict[str, Any]]:
    return [_survey_row(q, h, dashed) for h in range(1, h_max + 1) for dashed in (True, False)]


@dataclass
class IdentityCensus:
    """Rows in (q, h, dashed) order plus the pattern summary."""

    q_max: int
    h_max: int
    rows: list[dict[str, Any]] = field(default_factory=list)
    dashed_mismatches: int = 0
    undashed_mismatches: int = 0
    pattern_violations: list[str] = field(default_factory=list)
    divisible_nonzero: int = 0

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def dashed_identity_holds(self) -> bool:
        return self.dashed_mismatches == 0

    @property
    def pattern_holds(self) -> bool:
        return not self.pattern_violations

    def summary(self) -> dict[str, Any]:
        listed = self.pattern_violations[:_MAX_LISTED]
        return {
            "q_max": self.q_max,
            "h_max": self.h_max,
            "total": self.total,
            "dashed_mismatches": self.dashed_mismatches,
            "undashed_mismatches": self.undashed_mismatches,
            "pattern_holds": self.pattern_holds,
            "pattern_violations": len(self.pattern_violations),
            "pattern_violation_list": "; ".join(listed),
            "divisible_nonzero": self.divisible_nonzero,
        }


def _tally(census: IdentityCensus) -> None:
    for row in census.rows:
        q, h = row["q"], row["h"]
        exact = Fraction(row["exact_num"], row["exact_den"])
        rhs = Fraction(row["rhs_num"], row["rhs_den"])
        if h % q == 0 and (exact or rhs):
            census.divisible_nonzero += 1
        if row["dashed"]:
            if row["mismatch"]:
                census.dashed_mismatches += 1
                census.pattern_violations.append(f"dashed q={q} h={h}: {exact} != {rhs}")
            continue
        if row["mismatch"]:
            census.undashed_mismatches += 1
        if expected_undashed_match(q, h):
            if row["mismatch"]:
                census.pattern_violations.append(f"undashed q={q} h={h}: {exact} != {rhs}")
        elif rhs - exact != Fraction(2, q):
            census.pattern_violations.append(
                f"undashed q={q} h={h}: gap {rhs - exact} != 2/{q}"
            )


def run_identity_survey(q_max: int, h_max: int, max_parallel: int | None = None) -> IdentityCensus:
    """Compare every power sum on the grid with its closed form.

    Each modulus is one executor task; rows come back in (q, h, dashed)
    order whatever the pool size.
    """
    if q_max < 2 or h_max < 2:
        raise DomainError(f"Need q_max >= 2 and h_max >= 2, got {q_max}, {h_max}")
    tasks = [
        ScanTask(name=f"q={q}", run=partial(_survey_modulus, q, h_max))
        for q in range(2, q_max + 1)
    ]
    census = IdentityCensus(q_max=q_max, h_max=h_max)
    for result in make_executor(tasks, max_parallel).execute():
        if result.status != "passed":
            raise DomainError(f"Survey of {result.name} failed: {result.error}")
        census.rows.extend(result.value)
    _tally(census)
    return census
