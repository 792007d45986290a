"""Diagonal / off-diagonal decomposition of the mixed integral and the
lower-bound functionals built on Ramanujan coefficients.

For f = g*1 truncated at Q the weighted sum sum_q g(q) chi_q(x) is the
symmetry sum of f, so the left side of the decomposition is a mixed
symmetry integral over N <= x < 2N (discrete for plain chi, continuous
for the dashed one). The diagonal keeps only matching primitive
frequencies j/l; what is left is the off-diagonal part, measured against
the large-sieve envelope.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal

from symlab.arith.constants import mobius_norm_sum
from symlab.arith.weights import SieveWeights, convolve_with_unit, ramanujan_block_sum, ramanujan_coefficient
from symlab.errors import DomainError, HypothesisViolation, WeightsError
from symlab.integrals.symmetry import IntegralReport, exact_dot, symmetry_sums
from symlab.spectral.fourier import primitive_power_sum
from symlab.spectral.window import chi_window

Variant = Literal["monotone", "general"]


def _check_supports(g: SieveWeights, g1: SieveWeights, D: int, Q: int) -> None:
    if not 1 < D <= Q:
        raise DomainError(f"Need 1 < D <= Q, got D={D}, Q={Q}")
    if g.support > Q:
        raise WeightsError(f"{g.label} support {g.support} exceeds Q={Q}")
    if g1.support > D:
        raise WeightsError(f"{g1.label} support {g1.support} exceeds D={D}")


def _envelope_sum(blocks: dict[int, Fraction], h: int, top: int) -> Fraction:
    """sum_{1<t<=2h} b_t^2 + h sum_{2h<t<=top} b_t^2 / t."""
    total = Fraction(0)
    for t in range(2, top + 1):
        b = blocks.get(t, Fraction(0))
        if not b:
            continue
        total += b * b if t <= 2 * h else h * b * b / t
    return total


def lemma_lhs_bruteforce(
    g: SieveWeights, g1: SieveWeights, N: int, h: int, dashed: bool = False
) -> Fraction:
    """Literal sum over x, q, d of g(q) g1(d) chi_q(x) chi_d(x)."""
    if N <= h:
        raise DomainError(f"Need N > h, got N={N}, h={h}")
    total = Fraction(0)
    for x in range(N, 2 * N):
        left = sum((g(q) * chi_window(q, h, x, dashed) for q in range(1, g.support + 1)), Fraction(0))
        right = sum((g1(d) * chi_window(d, h, x, dashed) for d in range(1, g1.support + 1)), Fraction(0))
        total += left * right
    return total


def lemma_decomposition(
    g: SieveWeights,
    g1: SieveWeights,
    N: int,
    h: int,
    D: int,
    Q: int,
    dashed: bool = False,
) -> IntegralReport:
    """lhs = diagonal + off_diagonal with the envelope and measured constant.

    diagonal = N sum_{1<l<=D} A_l B_l P*(l), with
    A_l = sum_{d<=D/l} g1(ld)/d, B_l = sum_{q<=Q/l} g(lq)/q and P*(l) the
    starred power sum of the matching convention. The envelope is
    D Q log N sqrt(A) sqrt(B) with A, B the weighted block sums of
    :func:`_envelope_sum`.
    """
    _check_supports(g, g1, D, Q)
    if N <= h:
        raise DomainError(f"Need N > h, got N={N}, h={h}")
    limit = 2 * N - 1 + h
    f = convolve_with_unit(g, limit)
    f1 = convolve_with_unit(g1, limit)
    lhs = exact_dot(symmetry_sums(f, N, h, dashed), symmetry_sums(f1, N, h, dashed))

    blocks_g1 = {ell: ramanujan_block_sum(g1, ell, D) for ell in range(2, D + 1)}
    blocks_g = {ell: ramanujan_block_sum(g, ell, Q) for ell in range(2, Q + 1)}
    diagonal = Fraction(0)
    for ell in range(2, D + 1):
        weight = blocks_g1[ell] * blocks_g[ell]
        if weight:
            diagonal += weight * primitive_power_sum(ell, h, dashed).exact
    diagonal *= N
    off_diagonal = lhs - diagonal

    A = _envelope_sum(blocks_g1, h, D)
    B = _envelope_sum(blocks_g, h, Q)
    envelope = D * Q * math.log(N) * math.sqrt(A) * math.sqrt(B)
    measured = abs(float(off_diagonal)) / envelope if envelope > 0 else 0.0
    main = theorem_main_term(g, g1, N, h, D)
    return IntegralReport(
        kind="lemma",
        value=Fraction(lhs),
        mode="continuous" if dashed else "discrete",
        N=N,
        h=h,
        f_label=f.label,
        f1_label=f1.label,
        terms={
            "D": D,
            "Q": Q,
            "lhs": Fraction(lhs),
            "diagonal": diagonal,
            "off_diagonal": off_diagonal,
            "envelope": envelope,
            "measured_constant": measured,
            "main_term": main,
            "residual": Fraction(lhs) - main,
        },
    )


def theorem_main_term(g: SieveWeights, g1: SieveWeights, N: int, h: int, D: int) -> Fraction:
    """2N sum_{1<l<=D} l^2 R_l(f) R_l(f1) sum_{t|l} mu(t)/t^2 ||ht/l||."""
    total = Fraction(0)
    for ell in range(2, D + 1):
        r = ramanujan_coefficient(g, ell) * ramanujan_coefficient(g1, ell)
        if r:
            total += ell * ell * r * mobius_norm_sum(ell, h)
    return 2 * N * total


def theorem_hypotheses(
    g: SieveWeights, g1: SieveWeights, D: int, Q: int, variant: Variant = "monotone"
) -> list[str]:
    """Every violated hypothesis of the lower bound, as text."""
    violations: list[str] = []
    if not 1 < D <= Q:
        violations.append(f"1<D<=Q (D={D}, Q={Q})")
    if g.support > Q:
        violations.append(f"supp g <= Q ({g.support} > {Q})")
    if g1.support > D:
        violations.append(f"supp g1 <= D ({g1.support} > {D})")
    for w in (g, g1):
        low = [q for q in range(1, w.support + 1) if w(q) < 1]
        if low:
            violations.append(f"1<={w.label}(q) (fails at q={low[0]})")
    if variant == "monotone" and not g.is_monotone_on_multiples():
        violations.append(f"{g.label}(lq)>={g.label}(q)")
    return violations


def theorem_lower_bound(
    g: SieveWeights,
    g1: SieveWeights,
    N: int,
    h: int,
    D: int,
    Q: int,
    variant: Variant = "monotone",
) -> Fraction:
    """The lower-bound functional for I_{f,f1}(N, h), without its constant.

    monotone: N (sum_{q<=Q/D} g(q)/q) sum_{1<l<=D/2} A_l m(l)
    general:  N sum_{1<l<=D/2} A_l B_l m(l)
    with A_l = sum_{d<=D/l} g1(ld)/d, B_l = sum_{q<=Q/l} g(lq)/q and
    m(l) = sum_{t|l} mu(t)/t^2 ||ht/l||.

    Raises:
        HypothesisViolation: Listing every hypothesis that fails.
    """
    if variant not in ("monotone", "general"):
        raise DomainError(f"Unknown variant {variant!r}")
    violations = theorem_hypotheses(g, g1, D, Q, variant)
    if violations:
        raise HypothesisViolation(violations)
    total = Fraction(0)
    for ell in range(2, D // 2 + 1):
        a = ramanujan_block_sum(g1, ell, D)
        if not a:
            continue
        b = ramanujan_block_sum(g, ell, Q) if variant == "general" else Fraction(1)
        total += a * b * mobius_norm_sum(ell, h)
    if variant == "monotone":
        total *= sum((g(q) / q for q in range(1, Q // D + 1)), Fraction(0))
    return N * total
