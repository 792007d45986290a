"""Window character, its finite Fourier expansion, and Farey estimates."""

from symlab.spectral.farey import (
    FareyAudit,
    FareyPair,
    bounded_geometric_sum,
    farey_fractions,
    farey_spacing_audit,
)
from symlab.spectral.fourier import (
    PowerSumCheck,
    PrimitivePowerSum,
    WindowSpectrum,
    coefficient_power_sum,
    e_q,
    primitive_power_sum,
    ramanujan_sum,
    ramanujan_sums,
    reconstruct_chi,
    window_fourier_coefficient,
    window_spectrum,
)
from symlab.spectral.window import chi_window, residue_class_sums, sign_weight

__all__ = [
    "FareyAudit",
    "FareyPair",
    "PowerSumCheck",
    "PrimitivePowerSum",
    "WindowSpectrum",
    "bounded_geometric_sum",
    "chi_window",
    "coefficient_power_sum",
    "e_q",
    "farey_fractions",
    "farey_spacing_audit",
    "primitive_power_sum",
    "ramanujan_sum",
    "ramanujan_sums",
    "reconstruct_chi",
    "residue_class_sums",
    "sign_weight",
    "window_fourier_coefficient",
    "window_spectrum",
]
