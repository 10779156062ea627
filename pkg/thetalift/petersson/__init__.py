"""
Petersson inner products.

Submodules:
    - pairing: Quadrature over the fundamental domain, vector-valued and on Gamma_0(N)
    - closed_form: Products of theta functions from eta values at CM points
"""

from thetalift.petersson.closed_form import (
    class_invariant,
    closed_form_scalar,
    closed_form_vv,
    phi_character_sum,
    phi_value,
    sym_norm_identity,
)
from thetalift.petersson.pairing import (
    MIN_HEIGHT,
    PeterssonValue,
    check_method,
    gram_matrix,
    pairing_truncation,
    petersson_blocks,
    petersson_scalar_gamma0,
    petersson_vv,
)

__all__ = [
    # Quadrature
    "MIN_HEIGHT",
    "PeterssonValue",
    "check_method",
    "gram_matrix",
    "pairing_truncation",
    "petersson_blocks",
    "petersson_scalar_gamma0",
    "petersson_vv",
    # Closed forms
    "class_invariant",
    "closed_form_scalar",
    "closed_form_vv",
    "phi_character_sum",
    "phi_value",
    "sym_norm_identity",
]
