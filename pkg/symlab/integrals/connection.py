"""How far the symmetry integral sits below the Selberg integral.

On (m, m+1) the continuous symmetry integrand splits as

    (W(m) - M(m)) - (W(m-h) - M(m-h)) + (M(m) - M(m-h))

with W(m) = sum_{n=m+1}^{m+h} f(n), so I_f <= 3 (J + J_shifted + mean
difference) holds exactly. The audit reports each piece next to the
coarser bound J + mean difference + (N + h^3).
"""

from __future__ import annotations

from symlab.arith.tables import FunctionTable
from symlab.arith.weights import SieveWeights
from symlab.integrals.selberg import (
    MeanValueModel,
    mean_value_series,
    selberg_residuals,
    squared_residual_sum,
)
from symlab.integrals.symmetry import IntegralReport, check_integral_range, symmetry_integral


def _ratio(num: object, den: object) -> float:
    return float(num) / float(den) if den else float("inf")


def connection_audit(
    f: FunctionTable,
    g: SieveWeights | None,
    N: int,
    h: int,
    model: MeanValueModel,
) -> IntegralReport:
    """I_f next to the terms that bound it, with ratios.

    When g is given with a sieve model it replaces the model's weights, so J
    and the mean difference are taken against the same M.
    """
    check_integral_range(f, N, h)
    if g is not None and model.variant == "sieve_main_term":
        model = MeanValueModel.sieve_main_term(g)
    I_f = symmetry_integral(f, N, h, "continuous").value
    J = squared_residual_sum(selberg_residuals(f, N, 2 * N, h, model))
    J_shifted = squared_residual_sum(selberg_residuals(f, N - h, 2 * N - h, h, model))
    means = mean_value_series(model, N - h, 2 * N, h, f=f)
    # means[i] is M(N - h + i)
    mean_difference = squared_residual_sum([means[i + h] - means[i] for i in range(N)])
    error_term = N + h ** 3
    square_sum = squared_residual_sum(f.values[N : 2 * N].tolist())
    square_sum_shifted = squared_residual_sum(f.values[N - h : 2 * N - h].tolist())
    chain = J + mean_difference + error_term
    full = J + J_shifted + mean_difference + square_sum + square_sum_shifted
    return IntegralReport(
        kind="connection",
        value=I_f,
        mode="continuous",
        N=N,
        h=h,
        f_label=f.label,
        terms={
            "model": model.label,
            "I_f": I_f,
            "J": J,
            "J_shifted": J_shifted,
            "mean_difference": mean_difference,
            "error_term": error_term,
            "square_sum": square_sum,
            "square_sum_shifted": square_sum_shifted,
            "ratio": _ratio(I_f, chain),
            "ratio_full": _ratio(I_f, full),
            "split_bound_holds": I_f <= 3 * (J + J_shifted + mean_difference),
        },
    )
