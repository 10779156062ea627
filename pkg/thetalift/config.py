"""
Configuration module for the theta lifting toolkit.

Contains the reference data for the test discriminants, numeric tolerances,
the precision context shared by all numerical routines and the run
configuration consumed by the CLI and the verification service.
"""

from contextlib import AbstractContextManager
from dataclasses import dataclass, field, replace
from math import ceil, log, pi
from pathlib import Path
from typing import Any, Dict, List, Optional

import mpmath as mp
import yaml


# =============================================================================
# TEST DISCRIMINANTS
# =============================================================================

TEST_DISCRIMINANTS = {
    -7: {
        "class_number": 1,
        "cyclic_orders": [],
        "theta_dim": 1,
        "description": "Q(sqrt(-7)), trivial class group",
    },
    -15: {
        "class_number": 2,
        "cyclic_orders": [2],
        "theta_dim": 2,
        "description": "Q(sqrt(-15)), two genera",
    },
    -23: {
        "class_number": 3,
        "cyclic_orders": [3],
        "theta_dim": 2,
        "description": "Q(sqrt(-23)), smallest cubic class group",
    },
    -47: {
        "class_number": 5,
        "cyclic_orders": [5],
        "theta_dim": 3,
        "description": "Q(sqrt(-47)), cyclic of order 5",
    },
    -71: {
        "class_number": 7,
        "cyclic_orders": [7],
        "theta_dim": 4,
        "description": "Q(sqrt(-71)), cyclic of order 7",
    },
}


# =============================================================================
# TOLERANCES
# =============================================================================

TOLERANCES = {
    # Fundamental-domain membership slack
    "boundary": 1e-12,
    # Weil representation relations at 128 bits
    "weil": 1e-20,
    # Eta functional equation and tail bounds
    "eta": 1e-30,
    # Lift identities (componentwise absolute error)
    "lift": 1e-8,
    # Off-diagonal Petersson products of the theta basis
    "orthogonality": 1e-6,
    # Relative agreement of closed forms and quadrature
    "closed_form": 1e-5,
    # Coefficient extraction aliasing
    "extraction": 1e-10,
}

PAIRING_METHODS = ["quadrature", "closed_form", "both"]

# Euler-Mascheroni constant, 50 digits after the point
EULER_GAMMA_DIGITS = "0.57721566490153286060651209008240243104215933593992"


# =============================================================================
# PRECISION CONTEXT
# =============================================================================

@dataclass(frozen=True)
class PrecisionContext:
    """
    Working precision and discretization parameters for numerical routines.

    Attributes:
        bits: mpmath working precision in bits
        eta_terms: Product truncation for eta; chosen from Im(tau) when None
        quad_nodes_u: Gauss-Legendre nodes in the real direction
        quad_nodes_v: Gauss-Legendre nodes in the imaginary direction
        height_T: Height above which Petersson integrals are summed exactly
        sample_height: Default height of coefficient-extraction sample lines
    """

    bits: int = 128
    eta_terms: Optional[int] = None
    quad_nodes_u: int = 64
    quad_nodes_v: int = 64
    height_T: float = 1.5
    sample_height: float = 2.0

    def __post_init__(self):
        if self.bits < 53:
            raise ValueError(f"Precision must be at least 53 bits, got {self.bits}")
        if self.eta_terms is not None and self.eta_terms <= 0:
            raise ValueError(f"eta_terms must be positive, got {self.eta_terms}")
        if self.quad_nodes_u < 2 or self.quad_nodes_v < 2:
            raise ValueError(
                f"Quadrature needs at least 2 nodes, got {self.quad_nodes_u}x{self.quad_nodes_v}"
            )
        if self.height_T <= 1.0:
            raise ValueError(f"height_T must exceed 1, got {self.height_T}")
        if self.sample_height <= 0:
            raise ValueError(f"sample_height must be positive, got {self.sample_height}")

    @property
    def epsilon(self) -> float:
        """Unit roundoff of the working precision."""
        return 2.0 ** (-self.bits)

    @property
    def digits(self) -> int:
        """Decimal digits carried by the working precision."""
        return int(self.bits * log(2) / log(10))

    def workprec(self) -> AbstractContextManager:
        """Context manager switching mpmath to the working precision."""
        return mp.workprec(self.bits)

    def eta_terms_for(self, im_tau: float) -> int:
        """Product terms needed so that exp(-2 pi Im(tau) terms) < 2^-bits."""
        if self.eta_terms is not None:
            return self.eta_terms
        return int(ceil(self.bits * log(2) / (2 * pi * im_tau))) + 2

    def with_nodes(self, quad_nodes_u: int, quad_nodes_v: Optional[int] = None) -> "PrecisionContext":
        """Copy with a different quadrature grid."""
        return replace(
            self,
            quad_nodes_u=quad_nodes_u,
            quad_nodes_v=quad_nodes_v if quad_nodes_v is not None else quad_nodes_u,
        )


DEFAULT_PRECISION = PrecisionContext()


# =============================================================================
# RUN CONFIGURATION
# =============================================================================

@dataclass
class RunConfig:
    """Configuration for a CLI or verification run."""

    # Discriminant
    disc: int = -23

    # Precision
    prec_bits: int = 128

    # Truncation of q-expansions (bound on the scalar exponent)
    n_max: int = 50

    # Quadrature
    quad_nodes: int = 64
    height_T: float = 1.5

    # Petersson method
    method: str = "both"

    # Lattice class and seed for random points and matrices
    a_class: int = 0
    seed: int = 0

    # Lift checks: random evaluation points and the extraction truncation
    lift_samples: int = 10
    extraction_n_max: int = 30

    # Output
    pretty: bool = False
    output: Optional[str] = None

    # Verification checks to run (all when empty)
    checks: List[str] = field(default_factory=list)

    @classmethod
    def from_yaml(cls, yaml_path: str) -> "RunConfig":
        """Load configuration from YAML file."""
        with open(yaml_path, "r") as f:
            data = yaml.safe_load(f) or {}
        return cls(**data)

    def to_yaml(self, yaml_path: str) -> None:
        """Save configuration to YAML file."""
        data = {
            "disc": self.disc,
            "prec_bits": self.prec_bits,
            "n_max": self.n_max,
            "quad_nodes": self.quad_nodes,
            "height_T": self.height_T,
            "method": self.method,
            "a_class": self.a_class,
            "seed": self.seed,
            "lift_samples": self.lift_samples,
            "extraction_n_max": self.extraction_n_max,
            "pretty": self.pretty,
            "output": self.output,
            "checks": list(self.checks),
        }
        with open(yaml_path, "w") as f:
            yaml.dump(data, f, default_flow_style=False)

    def precision(self) -> PrecisionContext:
        """Precision context described by this configuration."""
        return PrecisionContext(
            bits=self.prec_bits,
            quad_nodes_u=self.quad_nodes,
            quad_nodes_v=self.quad_nodes,
            height_T=self.height_T,
        )

    def validate(self) -> "RunConfig":
        """Check the configuration against module preconditions."""
        from thetalift.arith import FundamentalDiscriminant

        FundamentalDiscriminant(self.disc)
        if self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max}")
        if self.method not in PAIRING_METHODS:
            raise ValueError(f"Unknown method: {self.method}. Valid: {PAIRING_METHODS}")
        if self.a_class < 0:
            raise ValueError(f"a_class must be non-negative, got {self.a_class}")
        if self.lift_samples < 1 or self.extraction_n_max < 1:
            raise ValueError(
                f"Lift checks need positive sizes, got {self.lift_samples} samples "
                f"and extraction_n_max={self.extraction_n_max}"
            )
        self.precision()
        return self


# Default configuration
DEFAULT_CONFIG = RunConfig()


def get_config(yaml_path: Optional[str] = None) -> RunConfig:
    """Get configuration, optionally from YAML file."""
    if yaml_path and Path(yaml_path).exists():
        return RunConfig.from_yaml(yaml_path)
    return DEFAULT_CONFIG


def get_tolerance(name: str) -> float:
    """Get a named numeric tolerance."""
    if name not in TOLERANCES:
        raise ValueError(f"Unknown tolerance: {name}. Valid: {list(TOLERANCES.keys())}")
    return TOLERANCES[name]


def get_expected(disc: int) -> Dict[str, Any]:
    """Get reference data for one of the test discriminants."""
    if disc not in TEST_DISCRIMINANTS:
        raise ValueError(
            f"Unknown discriminant: {disc}. Valid: {list(TEST_DISCRIMINANTS.keys())}"
        )
    return TEST_DISCRIMINANTS[disc]
