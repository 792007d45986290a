"""Symmetry, mixed and Selberg integrals with their decompositions."""

from symlab.integrals.connection import connection_audit
from symlab.integrals.lemma import (
    lemma_decomposition,
    lemma_lhs_bruteforce,
    theorem_hypotheses,
    theorem_lower_bound,
    theorem_main_term,
)
from symlab.integrals.selberg import (
    MeanValueModel,
    fit_log_polynomial,
    mean_value_eval,
    mean_value_series,
    selberg_integral,
)
from symlab.integrals.symmetry import (
    MODES,
    IntegralReport,
    InequalityCheck,
    inequality_one_check,
    mixed_symmetry_integral,
    quadrature_symmetry_integral,
    symmetry_integral,
    symmetry_sum,
    symmetry_sums,
)

__all__ = [
    "MODES",
    "IntegralReport",
    "InequalityCheck",
    "MeanValueModel",
    "connection_audit",
    "fit_log_polynomial",
    "inequality_one_check",
    "lemma_decomposition",
    "lemma_lhs_bruteforce",
    "mean_value_eval",
    "mean_value_series",
    "mixed_symmetry_integral",
    "quadrature_symmetry_integral",
    "selberg_integral",
    "symmetry_integral",
    "symmetry_sum",
    "symmetry_sums",
    "theorem_hypotheses",
    "theorem_lower_bound",
    "theorem_main_term",
]
