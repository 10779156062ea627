"""
High-precision numerics.

Submodules:
    - exponential: e(x) and the Euler constant
    - eta: Dedekind eta and its invariant logarithm
    - extraction: Fourier coefficients from horizontal samples
    - quadrature: Gauss-Legendre integration over the fundamental domain
"""

from thetalift.numerics.eta import EtaValue, dedekind_eta, invariant_log_eta, log_abs_eta
from thetalift.numerics.exponential import e_of, euler_gamma, gamma_prime_one
from thetalift.numerics.extraction import (
    ExtractionResult,
    extract_coefficients,
    max_sample_height,
    required_terms,
    suggested_samples,
)
from thetalift.numerics.quadrature import (
    QuadratureResult,
    domain_nodes,
    gauss_legendre,
    petersson_quadrature,
)

__all__ = [
    # Exponential
    "e_of",
    "euler_gamma",
    "gamma_prime_one",
    # Eta
    "EtaValue",
    "dedekind_eta",
    "invariant_log_eta",
    "log_abs_eta",
    # Extraction
    "ExtractionResult",
    "extract_coefficients",
    "max_sample_height",
    "required_terms",
    "suggested_samples",
    # Quadrature
    "QuadratureResult",
    "domain_nodes",
    "gauss_legendre",
    "petersson_quadrature",
]
