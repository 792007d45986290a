"""The d_k corollary: first-large-factor decomposition and growth audits."""

from symlab.corollary.decomposition import (
    DecompositionParams,
    DecompositionResult,
    decompose_dk_symmetry_sum,
    signed_multiple_counts,
)
from symlab.corollary.growth import (
    GROWTH_COLUMNS,
    GrowthPoint,
    HarmonicCheck,
    HarmonicSweep,
    NonDegradation,
    corollary_growth_ratio,
    divisor_harmonic_lower_check,
    divisor_harmonic_sweep,
    growth_non_degradation,
    growth_width,
)

__all__ = [
    "GROWTH_COLUMNS",
    "DecompositionParams",
    "DecompositionResult",
    "GrowthPoint",
    "HarmonicCheck",
    "HarmonicSweep",
    "NonDegradation",
    "corollary_growth_ratio",
    "decompose_dk_symmetry_sum",
    "divisor_harmonic_lower_check",
    "divisor_harmonic_sweep",
    "growth_non_degradation",
    "growth_width",
    "signed_multiple_counts",
]
