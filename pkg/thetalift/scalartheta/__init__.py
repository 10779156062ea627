"""
Scalar theta series.

Submodules:
    - qexpansion: Truncated Fourier expansions with exact or numerical coefficients
    - theta: theta_a, theta_psi, genus Eisenstein series and cusp parts
"""

from thetalift.scalartheta.qexpansion import (
    Coefficient,
    QExpansion,
    coeff_add,
    coeff_conj,
    coeff_is_zero,
    coeff_mul,
    evaluate,
    is_exact,
    to_complex,
)
from thetalift.scalartheta.theta import (
    RepNumbers,
    cusp_part,
    genus_eisenstein,
    genus_theta_sum,
    rep_numbers,
    theta_from_characters,
    theta_ideal,
    theta_psi,
)

__all__ = [
    # Expansions
    "Coefficient",
    "QExpansion",
    "coeff_add",
    "coeff_conj",
    "coeff_is_zero",
    "coeff_mul",
    "evaluate",
    "is_exact",
    "to_complex",
    # Theta series
    "RepNumbers",
    "cusp_part",
    "genus_eisenstein",
    "genus_theta_sum",
    "rep_numbers",
    "theta_from_characters",
    "theta_ideal",
    "theta_psi",
]
