"""
thetalift - theta functions and the theta lift for imaginary quadratic fields

Builds, for an odd fundamental discriminant D < 0, the class group, scalar
and vector-valued theta functions, the Weil representation of the lattice
P'/P and the lift S_P from scalar to vector-valued forms, and checks the
structure of the theta space through exact ranks and Petersson products.

Submodules:
    - arith: Discriminants, Kronecker symbols, SL2(Z) and Gamma_0(N) cosets
    - classgroup: Forms, the class group and its characters
    - ideallat: Ideals of the maximal order as lattices and coset transport
    - numerics: Eta, coefficient extraction and quadrature
    - scalartheta: Scalar theta series and q-expansions
    - weilrep: Discriminant forms, the Weil representation and the lift
    - vvtheta: Vector-valued theta functions and the space Theta(P)
    - petersson: Petersson products by quadrature and in closed form
    - io: JSON models and exporters
    - verification: Checks comparing independent computations
    - config: Reference data, tolerances, precision and run configuration

Example:
    >>> from thetalift import class_group, theta_ideal
    >>> theta_ideal(class_group(-23), 0, 6).coefficient_list()
    [1, 2, 0, 0, 2, 0, 4]
"""

__version__ = "1.0.0"

# Configuration
from thetalift.config import (
    DEFAULT_CONFIG,
    DEFAULT_PRECISION,
    TEST_DISCRIMINANTS,
    TOLERANCES,
    PrecisionContext,
    RunConfig,
    get_config,
    get_expected,
    get_tolerance,
)

# Errors
from thetalift.exceptions import (
    AliasingError,
    ConvergenceError,
    CosetTransportError,
    InvalidDiscriminantError,
    NonCuspidalError,
    ThetaLiftError,
)

# Arithmetic and class groups
from thetalift.arith import FundamentalDiscriminant, class_number_oracle
from thetalift.classgroup import (
    ClassCharacter,
    ClassGroup,
    character_from_index,
    characters,
    class_group,
    enumerate_reduced,
)

# Theta functions
from thetalift.scalartheta import QExpansion, theta_ideal, theta_psi
from thetalift.vvtheta import theta_space, vv_theta, vv_theta_psi, vv_theta_sym

# Weil representation and lift
from thetalift.weilrep import LiftOperator, VectorValuedForm, lift_coefficients, lift_eval

# Petersson products
from thetalift.petersson import (
    PeterssonValue,
    closed_form_scalar,
    closed_form_vv,
    petersson_scalar_gamma0,
    petersson_vv,
)

__all__ = [
    "__version__",
    # Configuration
    "DEFAULT_CONFIG",
    "DEFAULT_PRECISION",
    "TEST_DISCRIMINANTS",
    "TOLERANCES",
    "PrecisionContext",
    "RunConfig",
    "get_config",
    "get_expected",
    "get_tolerance",
    # Errors
    "AliasingError",
    "ConvergenceError",
    "CosetTransportError",
    "InvalidDiscriminantError",
    "NonCuspidalError",
    "ThetaLiftError",
    # Arithmetic and class groups
    "ClassCharacter",
    "ClassGroup",
    "FundamentalDiscriminant",
    "character_from_index",
    "characters",
    "class_group",
    "class_number_oracle",
    "enumerate_reduced",
    # Theta functions
    "QExpansion",
    "theta_ideal",
    "theta_psi",
    "theta_space",
    "vv_theta",
    "vv_theta_psi",
    "vv_theta_sym",
    # Weil representation and lift
    "LiftOperator",
    "VectorValuedForm",
    "lift_coefficients",
    "lift_eval",
    # Petersson products
    "PeterssonValue",
    "closed_form_scalar",
    "closed_form_vv",
    "petersson_scalar_gamma0",
    "petersson_vv",
]
