"""
Checks of the numerical building blocks: the Weil representation and eta.
"""

import logging

import mpmath as mp

from thetalift.arith import ModularMatrix, random_modular_matrix
from thetalift.config import get_tolerance
from thetalift.numerics import dedekind_eta, log_abs_eta
from thetalift.petersson import class_invariant
from thetalift.verification.base import CheckContext, CheckResult, VerificationCheck, fmt
from thetalift.vvtheta import lattice_discform
from thetalift.weilrep import chi_L, matrix_distance, weil_representation

logger = logging.getLogger(__name__)

RANDOM_PAIRS = 20
GAMMA0_SAMPLES = 10


def _random_gamma0(context: CheckContext, N: int) -> ModularMatrix:
    """A random element of Gamma_0(N) with c = N c0 and d prime to N c0."""
    while True:
        c0 = int(context.rng.integers(1, 6)) * (1 if context.rng.integers(0, 2) else -1)
        d = int(context.rng.integers(-40, 41))
        c = N * c0
        try:
            a = pow(d, -1, abs(c))
        except ValueError:
            continue
        b = (a * d - 1) // c
        return ModularMatrix(a, b, c, d)


class WeilRelationsCheck(VerificationCheck):
    """
    rho(S)^4 = I, (rho(S) rho(T))^3 = rho(S)^2, unitarity, the homomorphism
    property on random pairs and rho(gamma) e_0 = chi_L(gamma) e_0 on Gamma_0(N).
    """

    @property
    def name(self) -> str:
        return "weil_relations"

    @property
    def description(self) -> str:
        return "Relations, unitarity and homomorphism property of rho_P"

    def run(self, context: CheckContext) -> CheckResult:
        tol = get_tolerance("weil")
        _, df = lattice_discform(context.G, context.a_class)
        rep = weil_representation(df, ctx=context.ctx)
        N = df.N
        with context.ctx.workprec():
            I = mp.eye(N)
            MS = rep.generator_matrix("S")
            MT = rep.generator_matrix("T")
            MS2 = MS * MS
            ST = MS * MT
            defects = {
                "S^4": matrix_distance(MS2 * MS2, I),
                "(ST)^3": matrix_distance(ST * ST * ST, MS2),
                "unitarity_S": matrix_distance(MS * MS.H, I),
                "unitarity_T": matrix_distance(MT * MT.H, I),
            }
            homomorphism = mp.mpf(0)
            for _ in range(RANDOM_PAIRS):
                A = random_modular_matrix(context.rng)
                B = random_modular_matrix(context.rng)
                homomorphism = max(
                    homomorphism, matrix_distance(rep.matrix(A @ B), rep.matrix(A) * rep.matrix(B))
                )
            defects["homomorphism"] = homomorphism

            character = mp.mpf(0)
            e0 = rep.basis_vector(0)
            for _ in range(GAMMA0_SAMPLES):
                gamma = _random_gamma0(context, N)
                image = rep.apply(gamma, e0)
                sign = chi_L(gamma, df)
                character = max(
                    character,
                    max(abs(x - sign * y) for x, y in zip(image, e0)),
                )
            defects["chi_L"] = character
            defects["S_phase"] = abs(MS[0, 0] * mp.sqrt(N) + 1j)

        failing = [k for k, v in defects.items() if v >= tol]
        message = "all relations hold" if not failing else f"violated: {failing}"
        return self.result(
            not failing, message, tolerance=tol, N=N, **{k: fmt(v, 5) for k, v in defects.items()}
        )


class EtaConsistencyCheck(VerificationCheck):
    """
    |eta(2i)| = |eta(i/2)| / sqrt(2), eta(tau + 1) = e(1/24) eta(tau), and
    tail bounds below tolerance at every CM point of Cl(D).
    """

    @property
    def name(self) -> str:
        return "eta_consistency"

    @property
    def description(self) -> str:
        return "Eta functional equations and CM-point tail bounds"

    def run(self, context: CheckContext) -> CheckResult:
        tol = get_tolerance("eta")
        ctx = context.ctx
        with ctx.workprec():
            big = log_abs_eta(mp.mpc(0, 2), ctx).log_abs
            small = log_abs_eta(mp.mpc(0, 0.5), ctx).log_abs
            inversion = abs(mp.exp(big) - mp.exp(small) / mp.sqrt(2))

            tau = mp.mpc("0.1234", "1.1")
            shifted = dedekind_eta(tau + 1, ctx).value
            base = dedekind_eta(tau, ctx).value
            periodicity = abs(shifted - mp.expjpi(mp.mpf(1) / 12) * base)

            tails = [class_invariant(context.G, b, ctx).tail_bound for b in range(context.G.h)]
            worst_tail = max(tails)

        defects = {"inversion": inversion, "periodicity": periodicity, "cm_tail": worst_tail}
        failing = [k for k, v in defects.items() if v >= tol]
        message = "eta consistent" if not failing else f"violated: {failing}"
        return self.result(not failing, message, tolerance=tol, **{k: fmt(v, 5) for k, v in defects.items()})
