"""
The space Theta(P) spanned by Theta_P(tau, h) and its symmetric part.

Ranks are computed exactly on integer coefficient matrices with sympy.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from sympy import Matrix

from thetalift.classgroup import (
    ClassCharacter,
    ClassGroup,
    characters,
    conjugation_representatives,
    square_representatives,
)
from thetalift.exceptions import ConvergenceError
from thetalift.scalartheta import theta_ideal
from thetalift.vvtheta.theta import vv_theta, vv_theta_psi, vv_theta_sym, vv_theta_sym_psi
from thetalift.weilrep import VectorValuedForm

logger = logging.getLogger(__name__)


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Rank of an integer matrix, after dropping zero and repeated columns.

    Example:
        >>> exact_rank([[1, 2, 0], [2, 4, 0]])
        1
    """
    if not rows:
        return 0
    columns = {tuple(col) for col in zip(*rows) if any(col)}
    if not columns:
        return 0
    return int(Matrix([list(c) for c in sorted(columns)]).rank())


def _integer_rows(forms: Sequence[VectorValuedForm], n_top: int) -> List[List[int]]:
    return [[int(c) for c in F.coefficient_rows(n_top)] for F in forms]


def dimension_formula(G: ClassGroup) -> Fraction:
    """(h + 2^(t-1)) / 2."""
    return Fraction(G.h + 2 ** (G.disc.t - 1), 2)


@dataclass
class ThetaSpace:
    """
    Rank data of Theta(P) and its bases.

    Attributes:
        a_class: Class of P
        n_max: Truncation (exponents Q <= n_max)
        rank: Rank of {Theta_P(., h)}
        rank_half: The same rank at n_max // 2
        dimension_formula: (h + 2^(t-1)) / 2
        sym_rank: Rank of {Theta^sym_P(., h)}
        genus_rank: Rank of the scalar genus thetas {theta_{a h^2}}
        basis_characters: Indices of C, one character per conjugate pair
        sym_basis_characters: Indices of the squares modulo conjugation
        basis: Theta_P(., psi) for psi in C
        sym_basis: Theta^sym_P(., psi) for psi among the squares
    """

    a_class: int
    n_max: int
    rank: int
    rank_half: int
    dimension_formula: Fraction
    sym_rank: int
    genus_rank: int
    basis_characters: List[int]
    sym_basis_characters: List[int]
    basis: List[VectorValuedForm] = field(default_factory=list, repr=False)
    sym_basis: List[VectorValuedForm] = field(default_factory=list, repr=False)

    @property
    def dimension(self) -> int:
        return self.rank

    @property
    def matches_formula(self) -> bool:
        return self.rank == self.dimension_formula

    def to_dict(self) -> Dict:
        return {
            "a_class": self.a_class,
            "n_max": self.n_max,
            "rank": self.rank,
            "rank_half": self.rank_half,
            "dimension_formula": str(self.dimension_formula),
            "sym_rank": self.sym_rank,
            "genus_rank": self.genus_rank,
            "basis_characters": self.basis_characters,
            "sym_basis_characters": self.sym_basis_characters,
        }


def theta_space(G: ClassGroup, a_class: int, n_max: int, with_bases: bool = True) -> ThetaSpace:
    """
    Rank of Theta(P) at truncation n_max and the bases B(P), B^sym(P).

    Raises:
        ConvergenceError: If the rank at n_max // 2 differs from the rank at n_max
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2 for a stability check, got {n_max}")
    N = G.disc.N
    spanning = [vv_theta(G, a_class, h, n_max).form for h in range(G.h)]
    rank = exact_rank(_integer_rows(spanning, n_max * N))
    rank_half = exact_rank(_integer_rows(spanning, (n_max // 2) * N))
    if rank != rank_half:
        raise ConvergenceError(
            f"Rank of Theta(P) for D={G.D} did not stabilize: {rank_half} at "
            f"n_max={n_max // 2}, {rank} at n_max={n_max}; increase n_max"
        )

    symmetric = [vv_theta_sym(G, a_class, h, n_max) for h in range(G.h)]
    sym_rank = exact_rank(_integer_rows(symmetric, n_max * N))
    genus = [theta_ideal(G, G.class_action(h, a_class), n_max) for h in range(G.h)]
    genus_rank = exact_rank([[int(c) for c in g.coefficient_list()] for g in genus])

    chars = characters(G)
    C: List[ClassCharacter] = conjugation_representatives(chars)
    C_sq: List[ClassCharacter] = square_representatives(chars)
    space = ThetaSpace(
        a_class=a_class,
        n_max=n_max,
        rank=rank,
        rank_half=rank_half,
        dimension_formula=dimension_formula(G),
        sym_rank=sym_rank,
        genus_rank=genus_rank,
        basis_characters=[psi.index for psi in C],
        sym_basis_characters=[psi.index for psi in C_sq],
    )
    if with_bases:
        space.basis = [vv_theta_psi(G, a_class, psi, n_max) for psi in C]
        space.sym_basis = [vv_theta_sym_psi(G, a_class, psi, n_max) for psi in C_sq]
    logger.info(
        f"Theta(P) for D={G.D}, a={a_class}: rank {rank} "
        f"(formula {space.dimension_formula}), symmetric rank {sym_rank}"
    )
    return space
