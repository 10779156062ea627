"""
Exact lattice arithmetic in imaginary quadratic fields.

Submodules:
    - field: Elements x + y omega of Q(sqrt(D))
    - lattice: HNF lattices, ideal arithmetic, enumeration by norm
    - cosets: Transport of discriminant-group cosets between ideals
"""

from thetalift.ideallat.cosets import (
    CosetLabeling,
    TransportedCoset,
    coset_transport,
    labeling_for,
    transported_ideal,
)
from thetalift.ideallat.field import FieldElement, inverse_different
from thetalift.ideallat.lattice import (
    IdealLattice,
    conj,
    dual_ideal,
    enumerate_by_norm,
    enumerate_coordinates,
    form_from_ideal,
    ideal_from_form,
    ideal_sum,
    index,
    intersect,
    lattice_sum,
    multiply,
    representation_counts,
    sample_vectors,
    unit_ideal,
)

__all__ = [
    # Field
    "FieldElement",
    "inverse_different",
    # Lattices
    "IdealLattice",
    "conj",
    "dual_ideal",
    "enumerate_by_norm",
    "enumerate_coordinates",
    "form_from_ideal",
    "ideal_from_form",
    "ideal_sum",
    "index",
    "intersect",
    "lattice_sum",
    "multiply",
    "representation_counts",
    "sample_vectors",
    "unit_ideal",
    # Cosets
    "CosetLabeling",
    "TransportedCoset",
    "coset_transport",
    "labeling_for",
    "transported_ideal",
]
