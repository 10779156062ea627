"""
The lift S_P from scalar forms on Gamma_0(N) with character chi_D to
vector-valued forms for rho_P:

    S_P(f)(tau) = sum_{gamma in Gamma_0(N) \\ SL2(Z)} (f|_k gamma)(tau) rho_P(gamma^-1) e_0

Every theta_c is component 0 of Theta_c = Theta_{P_c}(tau, 1), which
transforms with rho_c. Hence theta_c|gamma = sum_mu conj(v^c_gamma)_mu Theta_{c, mu}
with v^c_gamma = rho_c(gamma^-1) e_0, and for f = sum_c a_c theta_c

    S_P(f) = sum_c a_c M_c Theta_c,   M_c = sum_gamma v^P_gamma conj(v^c_gamma)^T.

This never evaluates f at points close to the real line. Forms without a
theta decomposition are evaluated from their q-series at gamma tau instead.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import mpmath as mp

from thetalift.arith import ModularMatrix, coset_reps_gamma0
from thetalift.classgroup import ClassGroup
from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.numerics import extract_coefficients, max_sample_height
from thetalift.scalartheta import QExpansion, to_complex
from thetalift.weilrep.discform import DiscriminantForm, discform_for_class
from thetalift.weilrep.representation import Vector, WeilRepresentation, weil_representation
from thetalift.weilrep.vvforms import VectorValuedForm, from_component_coefficients

logger = logging.getLogger(__name__)

LIFT_ROUTES = ["parent", "extraction"]


@dataclass
class LiftOperator:
    """
    S_P for the lattice P of a class.

    Attributes:
        G: Class group
        a_class: Class of P
        ctx: Working precision
    """

    G: ClassGroup
    a_class: int
    ctx: PrecisionContext = field(default_factory=lambda: DEFAULT_PRECISION)
    df: DiscriminantForm = field(init=False)
    rep: WeilRepresentation = field(init=False, repr=False)
    reps: List[ModularMatrix] = field(init=False, repr=False)
    _vectors: Dict[int, List[Vector]] = field(default_factory=dict, init=False, repr=False)
    _matrices: Dict[int, mp.matrix] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self.df = discform_for_class(self.G, self.a_class)
        self.rep = weil_representation(self.df, ctx=self.ctx)
        self.reps = coset_reps_gamma0(self.df.N)

    @property
    def N(self) -> int:
        return self.df.N

    # -------------------------------------------------------------------------
    # Parent data
    # -------------------------------------------------------------------------

    def class_representation(self, c: int) -> WeilRepresentation:
        return weil_representation(discform_for_class(self.G, c), ctx=self.ctx)

    def lift_vectors(self, c: Optional[int] = None) -> List[Vector]:
        """rho(gamma^-1) e_0 over the coset representatives, for P or for P_c."""
        key = -1 if c is None else c
        if key not in self._vectors:
            rep = self.rep if c is None else self.class_representation(c)
            self._vectors[key] = [rep.lift_vector(gamma) for gamma in self.reps]
        return self._vectors[key]

    def parent_matrix(self, c: int) -> mp.matrix:
        """M_c = sum_gamma v^P_gamma conj(v^c_gamma)^T."""
        if c not in self._matrices:
            N = self.N
            with self.ctx.workprec():
                M = mp.matrix(N, N)
                for vP, vc in zip(self.lift_vectors(), self.lift_vectors(c)):
                    for mu in range(N):
                        if vP[mu] == 0:
                            continue
                        for nu in range(N):
                            M[mu, nu] += vP[mu] * mp.conj(vc[nu])
            self._matrices[c] = M
            logger.debug(f"Parent matrix for class {c} into P of class {self.a_class} (N={N})")
        return self._matrices[c]

    @staticmethod
    def parent_theta(G: ClassGroup, c: int, n_max: int) -> VectorValuedForm:
        """Theta_c = Theta_{P_c}(tau, 1)."""
        from thetalift.vvtheta import vv_theta

        return vv_theta(G, c, 0, n_max).form

    # -------------------------------------------------------------------------
    # Slash action
    # -------------------------------------------------------------------------

    def slash_eval(
        self, f: QExpansion, gamma: ModularMatrix, tau, tolerance: Optional[float] = None
    ) -> mp.mpc:
        """(f|_k gamma)(tau)."""
        with self.ctx.workprec():
            z = mp.mpc(tau)
            if f.theta_decomposition is not None:
                total = mp.mpc(0)
                for c, coeff in f.theta_decomposition.items():
                    row = self.class_representation(c).lift_vector(gamma)
                    values = self.parent_theta(self.G, c, f.prec).evaluate(z, self.ctx, tolerance)
                    total += to_complex(coeff, self.ctx.bits) * sum(
                        mp.conj(x) * y for x, y in zip(row, values)
                    )
                return total
            k = mp.mpf(f.weight.numerator) / f.weight.denominator
            return mp.power(gamma.j(z), -k) * f.evaluate(gamma.act(z), self.ctx, tolerance)

    def slash_expansion(self, f: QExpansion, gamma: ModularMatrix) -> QExpansion:
        """f|gamma as an expansion in e(n tau / N), for f with a theta decomposition."""
        if f.theta_decomposition is None:
            raise ValueError("f|gamma as a q-series needs a theta decomposition of f")
        N = self.N
        coeffs: Dict[int, mp.mpc] = {}
        with self.ctx.workprec():
            for c, weight in f.theta_decomposition.items():
                w = to_complex(weight, self.ctx.bits)
                row = self.class_representation(c).lift_vector(gamma)
                theta = self.parent_theta(self.G, c, f.prec)
                for mu in range(N):
                    if row[mu] == 0:
                        continue
                    factor = w * mp.conj(row[mu])
                    for n, count in theta.component(mu).coeffs.items():
                        coeffs[n] = coeffs.get(n, mp.mpc(0)) + factor * count
        return QExpansion(N=N, coeffs=coeffs, prec=f.prec * N, weight=f.weight, disc=self.G.D)

    # -------------------------------------------------------------------------
    # The lift
    # -------------------------------------------------------------------------

    def lift_eval(
        self,
        f: QExpansion,
        tau,
        reps: Optional[Sequence[ModularMatrix]] = None,
        tolerance: Optional[float] = None,
    ) -> Vector:
        """
        S_P(f)(tau) as a vector of length N.

        With the default coset representatives and a theta decomposition the
        parent matrices are used; otherwise the coset sum is taken term by term.
        """
        N = self.N
        with self.ctx.workprec():
            z = mp.mpc(tau)
            total = [mp.mpc(0)] * N
            if reps is None and f.theta_decomposition is not None:
                for c, weight in f.theta_decomposition.items():
                    M = self.parent_matrix(c)
                    values = self.parent_theta(self.G, c, f.prec).evaluate(z, self.ctx, tolerance)
                    w = to_complex(weight, self.ctx.bits)
                    for mu in range(N):
                        total[mu] += w * sum(M[mu, nu] * values[nu] for nu in range(N))
                return total

            reps = self.reps if reps is None else list(reps)
            for gamma in reps:
                value = self.slash_eval(f, gamma, z, tolerance)
                v = self.rep.lift_vector(gamma)
                for mu in range(N):
                    total[mu] += value * v[mu]
            return total

    def lift_coefficients(
        self,
        f: QExpansion,
        route: Optional[str] = None,
        n_max: Optional[int] = None,
        v0: Optional[float] = None,
        tolerance: Optional[float] = None,
    ) -> VectorValuedForm:
        """
        Fourier expansion of S_P(f) up to exponent n_max (default f.prec).

        Args:
            f: Scalar form of weight one
            route: 'parent' (exact matrices applied to theta coefficients) or
                'extraction' (sampling lift_eval); parent when f has a decomposition
            n_max: Bound on exponents n/N
            v0: Sample height for extraction, chosen from the precision when omitted
            tolerance: Aliasing tolerance for extraction

        Raises:
            ValueError: For an unknown route, or 'parent' without a decomposition
            AliasingError: If extraction exceeds tolerance
        """
        route = route or ("parent" if f.theta_decomposition is not None else "extraction")
        if route not in LIFT_ROUTES:
            raise ValueError(f"Unknown lift route: {route}. Valid: {LIFT_ROUTES}")
        n_max = f.prec if n_max is None else min(n_max, f.prec)
        N = self.N

        if route == "parent":
            if f.theta_decomposition is None:
                raise ValueError("The parent route needs a theta decomposition of f")
            coeffs: List[Dict[int, mp.mpc]] = [dict() for _ in range(N)]
            with self.ctx.workprec():
                for c, weight in f.theta_decomposition.items():
                    M = self.parent_matrix(c)
                    w = to_complex(weight, self.ctx.bits)
                    theta = self.parent_theta(self.G, c, n_max)
                    for nu in range(N):
                        for n, count in theta.component(nu).coeffs.items():
                            for mu in range(N):
                                if M[mu, nu] != 0:
                                    coeffs[mu][n] = coeffs[mu].get(n, mp.mpc(0)) + w * M[mu, nu] * count
            return from_component_coefficients(
                self.df, coeffs, prec=n_max * N, meta={"kind": "lift", "route": route}
            )

        v0 = max_sample_height(n_max, self.ctx) if v0 is None else v0
        cache: Dict[tuple, Vector] = {}

        def values(tau) -> Vector:
            key = (tau.real, tau.imag)
            if key not in cache:
                cache[key] = self.lift_eval(f, tau)
            return cache[key]

        coeffs = []
        for mu in range(N):
            result = extract_coefficients(
                lambda t, mu=mu: values(t)[mu], N, n_max, v0=v0, ctx=self.ctx, tolerance=tolerance
            )
            coeffs.append(dict(enumerate(result.coeffs)))
        logger.info(f"Lift of {f.meta.get('kind', 'form')} extracted at v0={v0:.3f}")
        return from_component_coefficients(
            self.df, coeffs, prec=n_max * N, meta={"kind": "lift", "route": route}
        )


def lift_eval(f: QExpansion, G: ClassGroup, a_class: int, tau, ctx=None, reps=None, tolerance=None):
    """S_P(f)(tau) for the lattice of class a_class."""
    return LiftOperator(G, a_class, ctx or DEFAULT_PRECISION).lift_eval(f, tau, reps, tolerance)


def lift_coefficients(
    f: QExpansion, G: ClassGroup, a_class: int, ctx=None, route=None, n_max=None, **kwargs
) -> VectorValuedForm:
    """Fourier expansion of S_P(f), see LiftOperator.lift_coefficients."""
    op = LiftOperator(G, a_class, ctx or DEFAULT_PRECISION)
    return op.lift_coefficients(f, route=route, n_max=n_max, **kwargs)
