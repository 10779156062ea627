"""
Discriminant forms, the Weil representation and the lift S_P.

Submodules:
    - discform: The cyclic discriminant form P'/P, O(P'/P), epsilon signs, nu
    - representation: rho(T), rho(S), rho(gamma) and the character chi_L
    - vvforms: Vector-valued forms and symmetrization
    - lift: The lift from scalar forms on Gamma_0(N) to vector-valued forms
"""

from thetalift.weilrep.discform import (
    SIGNATURE,
    DiscriminantForm,
    build_discform,
    discform_for_class,
    epsilon_signs,
    nu,
    orbit,
    orthogonal_group,
)
from thetalift.weilrep.lift import LIFT_ROUTES, LiftOperator, lift_coefficients, lift_eval
from thetalift.weilrep.representation import (
    WeilRepresentation,
    chi_L,
    lift_vectors,
    matrix_distance,
    rho,
    rho_generator,
    unitarity_defect,
    weil_representation,
)
from thetalift.weilrep.vvforms import VectorValuedForm, from_component_coefficients, symmetrize

__all__ = [
    # Discriminant forms
    "SIGNATURE",
    "DiscriminantForm",
    "build_discform",
    "discform_for_class",
    "epsilon_signs",
    "nu",
    "orbit",
    "orthogonal_group",
    # Representation
    "WeilRepresentation",
    "chi_L",
    "lift_vectors",
    "matrix_distance",
    "rho",
    "rho_generator",
    "unitarity_defect",
    "weil_representation",
    # Vector-valued forms
    "VectorValuedForm",
    "from_component_coefficients",
    "symmetrize",
    # Lift
    "LIFT_ROUTES",
    "LiftOperator",
    "lift_coefficients",
    "lift_eval",
]
