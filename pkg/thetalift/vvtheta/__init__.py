"""
Vector-valued theta functions of ideal lattices.

Submodules:
    - theta: Theta_P(tau, h), character sums, symmetrizations, E_P
    - space: Rank of Theta(P), the dimension formula and the bases B(P), B^sym(P)
"""

from thetalift.vvtheta.space import ThetaSpace, dimension_formula, exact_rank, theta_space
from thetalift.vvtheta.theta import (
    VVTheta,
    eisenstein_vv,
    lattice_discform,
    vv_theta,
    vv_theta_psi,
    vv_theta_sym,
    vv_theta_sym_psi,
)

__all__ = [
    # Theta functions
    "VVTheta",
    "eisenstein_vv",
    "lattice_discform",
    "vv_theta",
    "vv_theta_psi",
    "vv_theta_sym",
    "vv_theta_sym_psi",
    # Spaces
    "ThetaSpace",
    "dimension_formula",
    "exact_rank",
    "theta_space",
]
