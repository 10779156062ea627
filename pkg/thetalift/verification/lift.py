"""
Checks of the lift S_P against vector-valued theta functions.
"""

import logging

import mpmath as mp

from thetalift.config import get_tolerance
from thetalift.scalartheta import cusp_part, theta_ideal, to_complex
from thetalift.verification.base import CheckContext, CheckResult, VerificationCheck, fmt
from thetalift.vvtheta import vv_theta_sym
from thetalift.weilrep import LiftOperator, nu, orthogonal_group

logger = logging.getLogger(__name__)

# Imaginary parts of the random evaluation points
SAMPLE_HEIGHTS = (0.6, 2.0)


class LiftSymmetrizedCheck(VerificationCheck):
    """
    S_P(theta_{a h^2}) = Theta^sym_P(tau, h) for every class a and h.

    Compared at random points by evaluation, and for the configured class
    coefficient by coefficient through sampled extraction.
    """

    @property
    def name(self) -> str:
        return "lift_symmetrized"

    @property
    def description(self) -> str:
        return "S_P(theta_{a h^2}) equals the symmetrized vv theta"

    def run(self, context: CheckContext) -> CheckResult:
        tol = get_tolerance("lift")
        G, ctx, n_max = context.G, context.ctx, context.n_max
        with ctx.workprec():
            points = [
                mp.mpc(
                    context.rng.uniform(-0.5, 0.5), context.rng.uniform(*SAMPLE_HEIGHTS)
                )
                for _ in range(context.config.lift_samples)
            ]
        worst_eval = mp.mpf(0)
        worst_item = None
        for a in range(G.h):
            op = LiftOperator(G, a, ctx)
            for h in range(G.h):
                f = theta_ideal(G, G.class_action(h, a), n_max)
                target = vv_theta_sym(G, a, h, n_max)
                for tau in points:
                    lifted = op.lift_eval(f, tau)
                    expected = target.evaluate(tau, ctx)
                    with ctx.workprec():
                        diff = max(abs(x - y) for x, y in zip(lifted, expected))
                    if diff > worst_eval:
                        worst_eval, worst_item = diff, {"a": a, "h": h, "tau": fmt(tau, 8)}

        a = context.a_class
        n_ext = min(context.config.extraction_n_max, n_max)
        op = LiftOperator(G, a, ctx)
        worst_coeff = mp.mpf(0)
        for h in range(G.h):
            f = theta_ideal(G, G.class_action(h, a), n_max)
            extracted = op.lift_coefficients(f, route="extraction", n_max=n_ext)
            target = vv_theta_sym(G, a, h, n_ext)
            with ctx.workprec():
                for r in range(op.N):
                    for n in range(n_ext * op.N + 1):
                        diff = abs(
                            to_complex(extracted.coefficient(r, n), ctx.bits)
                            - to_complex(target.coefficient(r, n), ctx.bits)
                        )
                        worst_coeff = max(worst_coeff, diff)

        passed = worst_eval < tol and worst_coeff < tol
        message = (
            f"{G.h * G.h} pairs at {len(points)} points"
            if passed
            else f"max error {mp.nstr(max(worst_eval, worst_coeff), 5)} at {worst_item}"
        )
        return self.result(
            passed,
            message,
            tolerance=tol,
            evaluation_error=fmt(worst_eval, 5),
            coefficient_error=fmt(worst_coeff, 5),
            extraction_n_max=n_ext,
            worst=worst_item,
        )


class LiftComponentZeroCheck(VerificationCheck):
    """
    Component 0 of S_P(g_{a h^2}) is nu g_{a h^2}, with nu counted by
    enumeration and compared with |O(P'/P)| = 2^t and 2^(t-1).
    """

    @property
    def name(self) -> str:
        return "lift_component_zero"

    @property
    def description(self) -> str:
        return "<S_P(f), e_0> = nu f for the cusp parts of the genus thetas"

    def run(self, context: CheckContext) -> CheckResult:
        tol = get_tolerance("lift")
        G, ctx, n_max, a = context.G, context.ctx, context.n_max, context.a_class
        op = LiftOperator(G, a, ctx)
        N = op.N
        nu_count = nu(op.df, op.df.A)
        t = G.disc.t
        worst = mp.mpf(0)
        worst_item = None
        for h in range(G.h):
            f = cusp_part(G, a, h, n_max)
            lifted = op.lift_coefficients(f, route="parent").component(0)
            with ctx.workprec():
                for n in range(n_max * N + 1):
                    expected = nu_count * to_complex(f.coefficient(n // N), ctx.bits) if n % N == 0 else 0
                    diff = abs(to_complex(lifted.coefficient(n), ctx.bits) - expected)
                    if diff > worst:
                        worst, worst_item = diff, {"h": h, "n": n}

        passed = worst < tol and nu_count == len(orthogonal_group(op.df))
        message = f"nu = {nu_count}" if passed else f"max error {mp.nstr(worst, 5)} at {worst_item}"
        return self.result(
            passed,
            message,
            tolerance=tol,
            nu_enumerated=nu_count,
            two_to_t=2 ** t,
            two_to_t_minus_1=2 ** (t - 1),
            max_error=fmt(worst, 5),
            n_max=n_max,
        )
