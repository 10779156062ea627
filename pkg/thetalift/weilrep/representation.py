"""
The Weil representation of SL2(Z) on C[P'/P].

    rho(T) e_r = e(Q(r)) e_r
    rho(S) e_r = e(-sig/8) / sqrt(N) sum_s e(-(r, s)) e_s,   sig = 2

so rho(S)[0, 0] = -i/sqrt(N). The theta function of a positive definite
lattice transforms with this representation. The dual variant uses e(-Q)
and the phase +i; it is the complex conjugate representation.

rho(gamma) is applied to vectors along the S/T word of gamma; full matrices
are only assembled for relation checks.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

import mpmath as mp

from thetalift.arith import ModularMatrix, kronecker, st_decompose
from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.weilrep.discform import DiscriminantForm

logger = logging.getLogger(__name__)

Vector = List[mp.mpc]


@dataclass
class WeilRepresentation:
    """
    rho (or its dual) for a cyclic discriminant form at a fixed precision.

    Attributes:
        df: The discriminant form
        dual: Use the conjugate representation
        ctx: Working precision
    """

    df: DiscriminantForm
    dual: bool = False
    ctx: PrecisionContext = field(default_factory=lambda: DEFAULT_PRECISION)
    _t_phases: Vector = field(default_factory=list, init=False, repr=False)
    _s_kernel: Vector = field(default_factory=list, init=False, repr=False)
    _s_phase: mp.mpc = field(default=None, init=False, repr=False)

    def __post_init__(self):
        N = self.df.N
        sign = -1 if self.dual else 1
        with self.ctx.workprec():
            self._t_phases = [
                mp.expjpi(2 * sign * mp.mpf(self.df.norm_numerator(r)) / N) for r in range(N)
            ]
            # e(-(r, s)) only depends on 2 A r s mod N
            self._s_kernel = [mp.expjpi(-2 * sign * mp.mpf(k) / N) for k in range(N)]
            self._s_phase = mp.mpc(0, -sign) / mp.sqrt(N)

    @property
    def N(self) -> int:
        return self.df.N

    # -------------------------------------------------------------------------
    # Generators on vectors
    # -------------------------------------------------------------------------

    def apply_T(self, v: Sequence[mp.mpc], n: int = 1) -> Vector:
        with self.ctx.workprec():
            if n == 1:
                return [p * x for p, x in zip(self._t_phases, v)]
            return [p ** n * x for p, x in zip(self._t_phases, v)]

    def apply_S(self, v: Sequence[mp.mpc]) -> Vector:
        N = self.N
        twoA = 2 * self.df.A
        with self.ctx.workprec():
            out = []
            for s in range(N):
                acc = mp.mpc(0)
                for r, x in enumerate(v):
                    if x:
                        acc += self._s_kernel[twoA * r * s % N] * x
                out.append(self._s_phase * acc)
            return out

    def apply(self, gamma: ModularMatrix, v: Sequence[mp.mpc]) -> Vector:
        """rho(gamma) v, applying the word of gamma right to left."""
        word = st_decompose(gamma)
        out = [mp.mpc(x) for x in v]
        for name, n in reversed(word.tokens):
            out = self.apply_S(out) if name == "S" else self.apply_T(out, n)
        return out

    def basis_vector(self, r: int) -> Vector:
        v = [mp.mpc(0)] * self.N
        v[r % self.N] = mp.mpc(1)
        return v

    def lift_vector(self, gamma: ModularMatrix) -> Vector:
        """rho(gamma^-1) e_0."""
        return self.apply(gamma.inverse(), self.basis_vector(0))

    # -------------------------------------------------------------------------
    # Matrices
    # -------------------------------------------------------------------------

    def generator_matrix(self, which: str) -> mp.matrix:
        if which not in ("S", "T"):
            raise ValueError(f"Unknown generator: {which}. Valid: ['S', 'T']")
        with self.ctx.workprec():
            M = mp.matrix(self.N, self.N)
            for r in range(self.N):
                column = self.apply_S(self.basis_vector(r)) if which == "S" else (
                    self.apply_T(self.basis_vector(r))
                )
                for s in range(self.N):
                    M[s, r] = column[s]
            return M

    def matrix(self, gamma: ModularMatrix) -> mp.matrix:
        with self.ctx.workprec():
            M = mp.matrix(self.N, self.N)
            for r in range(self.N):
                column = self.apply(gamma, self.basis_vector(r))
                for s in range(self.N):
                    M[s, r] = column[s]
            return M


@lru_cache(maxsize=64)
def _weil(df: DiscriminantForm, dual: bool, bits: int) -> WeilRepresentation:
    return WeilRepresentation(df=df, dual=dual, ctx=PrecisionContext(bits=bits))


def weil_representation(
    df: DiscriminantForm, dual: bool = False, ctx: Optional[PrecisionContext] = None
) -> WeilRepresentation:
    """Cached representation per (form, variant, precision)."""
    ctx = ctx or DEFAULT_PRECISION
    return _weil(df, dual, ctx.bits)


def rho_generator(
    df: DiscriminantForm, which: str, dual: bool = False, ctx: Optional[PrecisionContext] = None
) -> mp.matrix:
    """
    Matrix of rho(S) or rho(T).

    Example:
        >>> M = rho_generator(build_discform(-7, 1), "S")
        >>> mp.nstr(M[0, 0] * mp.sqrt(7), 5)
        '(0.0 - 1.0j)'
    """
    return weil_representation(df, dual, ctx).generator_matrix(which)


def rho(
    df: DiscriminantForm, gamma: ModularMatrix, dual: bool = False,
    ctx: Optional[PrecisionContext] = None,
) -> mp.matrix:
    """Matrix of rho(gamma), assembled from its S/T word."""
    return weil_representation(df, dual, ctx).matrix(gamma)


def chi_L(gamma: ModularMatrix, df: DiscriminantForm) -> int:
    """
    The quadratic character of Gamma_0(N) with rho(gamma) e_0 = chi_L(gamma) e_0.

    chi_L(gamma) = (D | d), including d < 0.

    Raises:
        ValueError: If gamma is not in Gamma_0(N)
    """
    if not gamma.in_gamma0(df.N):
        raise ValueError(f"{gamma.as_tuple()} is not in Gamma_0({df.N})")
    return kronecker(df.D, gamma.d)


def unitarity_defect(rep: WeilRepresentation, gamma: ModularMatrix, v: Sequence[mp.mpc]) -> mp.mpf:
    """| ||rho(gamma) v|| - ||v|| |."""
    with rep.ctx.workprec():
        w = rep.apply(gamma, v)
        return abs(mp.sqrt(sum(abs(x) ** 2 for x in w)) - mp.sqrt(sum(abs(x) ** 2 for x in v)))


def matrix_distance(A: mp.matrix, B: mp.matrix) -> mp.mpf:
    """Largest entrywise difference."""
    return max(abs(A[i, j] - B[i, j]) for i in range(A.rows) for j in range(A.cols))


def lift_vectors(rep: WeilRepresentation, reps: Sequence[ModularMatrix]) -> Dict[int, Vector]:
    """rho(gamma^-1) e_0 for each coset representative, keyed by position."""
    return {i: rep.lift_vector(gamma) for i, gamma in enumerate(reps)}
