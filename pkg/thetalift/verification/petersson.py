"""
Petersson checks: orthogonality of the theta basis, closed forms against
quadrature, adjointness of the lift and the chain of scalar norms.
"""

import logging
from typing import Dict, List, Optional, Tuple

import mpmath as mp

from thetalift.classgroup import ClassCharacter, ClassGroup
from thetalift.config import get_tolerance
from thetalift.petersson import (
    PeterssonValue,
    closed_form_scalar,
    closed_form_vv,
    gram_matrix,
    pairing_truncation,
    petersson_scalar_gamma0,
    petersson_vv,
    phi_character_sum,
    sym_norm_identity,
)
from thetalift.scalartheta import genus_theta_sum, theta_psi
from thetalift.verification.base import CheckContext, CheckResult, VerificationCheck, fmt
from thetalift.vvtheta import vv_theta_psi, vv_theta_sym_psi
from thetalift.weilrep import LiftOperator

logger = logging.getLogger(__name__)

# Absolute agreement of the eta double sum with the closed form
PHI_TOLERANCE = 1e-8


def _quadrature_gram(context: CheckContext) -> Tuple[List[int], List[List[Optional[PeterssonValue]]]]:
    """Gram matrix of Theta_P(psi) over the non-trivial characters, built once per run."""

    def build():
        K = pairing_truncation()
        forms = [vv_theta_psi(context.G, context.a_class, psi, K) for psi in context.nontrivial]
        logger.info(f"Quadrature Gram matrix for D={context.D}: {len(forms)} forms")
        return [psi.index for psi in context.nontrivial], gram_matrix(forms, context.ctx)

    return context.cached("quadrature_gram", build)


def _relative_gap(x: PeterssonValue, y: PeterssonValue) -> mp.mpf:
    scale = max(abs(x.value), abs(y.value))
    return abs(x.value - y.value) / scale if scale else mp.mpf(0)


def _agree(x: PeterssonValue, y: PeterssonValue, rel: float) -> bool:
    return x.agrees_with(y) or _relative_gap(x, y) <= rel


def _has_nontrivial(G: ClassGroup) -> bool:
    return G.h > 1


class OrthogonalityCheck(VerificationCheck):
    """(Theta_P(psi), Theta_P(chi)) vanishes by quadrature whenever chi is neither psi nor conj(psi)."""

    @property
    def name(self) -> str:
        return "orthogonality"

    @property
    def description(self) -> str:
        return "Off-diagonal Petersson products of the theta basis vanish"

    def applies_to(self, G: ClassGroup) -> bool:
        return _has_nontrivial(G)

    def run(self, context: CheckContext) -> CheckResult:
        tol = get_tolerance("orthogonality")
        indices, gram = _quadrature_gram(context)
        chars = {psi.index: psi for psi in context.nontrivial}
        worst = mp.mpf(0)
        worst_pair = None
        pairs = 0
        for i, p in enumerate(indices):
            for j, q in enumerate(indices):
                if j <= i or chars[q] in (chars[p], chars[p].conjugate()):
                    continue
                pairs += 1
                size = abs(gram[i][j].value)
                if size > worst:
                    worst, worst_pair = size, [p, q]
        passed = worst < tol
        message = f"{pairs} orthogonal pairs" if passed else f"pair {worst_pair}: |(F, G)| = {mp.nstr(worst, 5)}"
        return self.result(passed, message, tolerance=tol, pairs=pairs, max_abs=fmt(worst, 5), worst_pair=worst_pair)


class ClosedFormAgreementCheck(VerificationCheck):
    """
    closed_form_vv against quadrature for every pair of non-trivial
    characters, with the ratio reported for every non-zero case so a
    constant-factor discrepancy is visible.
    """

    @property
    def name(self) -> str:
        return "closed_form_agreement"

    @property
    def description(self) -> str:
        return "Closed-form Petersson products agree with quadrature"

    def applies_to(self, G: ClassGroup) -> bool:
        return _has_nontrivial(G)

    def run(self, context: CheckContext) -> CheckResult:
        rel = get_tolerance("closed_form")
        zero_tol = get_tolerance("orthogonality")
        indices, gram = _quadrature_gram(context)
        chars = {psi.index: psi for psi in context.chars}
        rows = []
        failing = []
        for i, p in enumerate(indices):
            for j, q in enumerate(indices):
                closed = closed_form_vv(chars[p], chars[q], context.a_class, context.ctx)
                quad = gram[i][j]
                case = closed.meta["case"]
                if case == "zero":
                    ok = abs(quad.value) < zero_tol
                    ratio = None
                else:
                    ok = _agree(quad, closed, rel)
                    ratio = fmt(quad.value / closed.value, 10)
                rows.append(
                    {
                        "pair": [p, q],
                        "case": case,
                        "closed_form": fmt(closed.value),
                        "quadrature": fmt(quad.value),
                        "error": fmt(quad.error_estimate + closed.error_estimate, 3),
                        "ratio": ratio,
                    }
                )
                if not ok:
                    failing.append([p, q])

        # Pairings with the Eisenstein series are decided by the closed form alone
        trivial = context.chars[0]
        eisenstein_zero = all(
            closed_form_vv(trivial, chi, context.a_class, context.ctx).value == 0
            for chi in context.nontrivial
        )
        passed = not failing and eisenstein_zero
        message = f"{len(rows)} pairs agree" if passed else f"disagreeing pairs {failing}"
        return self.result(passed, message, tolerance=rel, pairs=rows, eisenstein_zero=eisenstein_zero)


class PhiDoubleSumCheck(VerificationCheck):
    """sum_{g, h} psi(g) conj(chi)(h) phi(a, g, h) reproduces closed_form_vv(psi, chi)."""

    @property
    def name(self) -> str:
        return "phi_double_sum"

    @property
    def description(self) -> str:
        return "The eta double character sum reproduces the closed forms"

    def applies_to(self, G: ClassGroup) -> bool:
        return _has_nontrivial(G)

    def run(self, context: CheckContext) -> CheckResult:
        worst = mp.mpf(0)
        worst_pair = None
        for psi in context.nontrivial:
            for chi in context.nontrivial:
                double = phi_character_sum(psi, chi, context.a_class, context.ctx)
                closed = closed_form_vv(psi, chi, context.a_class, context.ctx).value
                gap = abs(double - closed) / max(1, abs(closed))
                if gap > worst:
                    worst, worst_pair = gap, [psi.index, chi.index]
        passed = worst < PHI_TOLERANCE
        return self.result(
            passed,
            "double sums agree" if passed else f"pair {worst_pair} off by {mp.nstr(worst, 5)}",
            tolerance=PHI_TOLERANCE,
            max_gap=fmt(worst, 5),
            worst_pair=worst_pair,
        )


def _adjoint_characters(context: CheckContext) -> Tuple[ClassCharacter, ClassCharacter]:
    """chi of largest order and psi = chi^2, or psi = chi when chi^2 is trivial."""
    chi = max(context.nontrivial, key=lambda c: (c.order, -c.index))
    psi = chi.square()
    return chi, (chi if psi.is_trivial() else psi)


class AdjointnessCheck(VerificationCheck):
    """(S_P(f), F) = (f, F_0) for f = w_k theta_chi and F = Theta_P(psi)."""

    @property
    def name(self) -> str:
        return "adjointness"

    @property
    def description(self) -> str:
        return "The lift is adjoint to taking component 0"

    def applies_to(self, G: ClassGroup) -> bool:
        return _has_nontrivial(G)

    def run(self, context: CheckContext) -> CheckResult:
        rel = get_tolerance("closed_form")
        G, ctx, a = context.G, context.ctx, context.a_class
        K = pairing_truncation()
        chi, psi = _adjoint_characters(context)

        f = theta_psi(chi, K).scale(G.disc.w_k)
        F = vv_theta_psi(G, a, psi, K)
        F0 = genus_theta_sum(G, a, psi, K)
        component_matches = F.component(0).equals(F0.rescale(F.N))

        lifted = LiftOperator(G, a, ctx).lift_coefficients(f, route="parent")
        vector_side = petersson_vv(lifted, F, ctx)
        scalar_side = petersson_scalar_gamma0(f, F0, G, ctx)

        passed = component_matches and _agree(vector_side, scalar_side, rel)
        return self.result(
            passed,
            "both sides agree" if passed else f"(S_P f, F) = {fmt(vector_side.value)}, (f, F_0) = {fmt(scalar_side.value)}",
            tolerance=rel,
            chi=chi.index,
            psi=psi.index,
            vector_side=vector_side.to_dict(15),
            scalar_side=scalar_side.to_dict(15),
            relative_gap=fmt(_relative_gap(vector_side, scalar_side), 5),
            component_zero_matches=component_matches,
        )


class ScalarNormChainCheck(VerificationCheck):
    """
    (theta_chi, theta_chi) three ways for prime |D|: the eta closed form,
    quadrature on Gamma_0(N), and the symmetric vv norm divided by the
    factor of the symmetric-norm identity.
    """

    @property
    def name(self) -> str:
        return "scalar_norm_chain"

    @property
    def description(self) -> str:
        return "Scalar theta norms: closed form, Gamma_0(N) quadrature, symmetric vv norm"

    def applies_to(self, G: ClassGroup) -> bool:
        return G.disc.t == 1 and _has_nontrivial(G)

    def run(self, context: CheckContext) -> CheckResult:
        rel = get_tolerance("closed_form")
        G, ctx, a = context.G, context.ctx, context.a_class
        K = pairing_truncation()
        chi = max(context.nontrivial, key=lambda c: (c.order, -c.index))
        psi = chi.square()

        closed = closed_form_scalar(chi, ctx)
        theta = theta_psi(chi, K)
        gamma0 = petersson_scalar_gamma0(theta, theta, G, ctx)

        sym = vv_theta_sym_psi(G, a, psi, K)
        sym_norm = petersson_vv(sym, sym, ctx)
        unit: Dict[int, PeterssonValue] = {
            chi.index: PeterssonValue(mp.mpc(1), mp.mpf(0), "closed_form")
        }
        factor = sym_norm_identity(psi, a, norms=unit, ctx=ctx).value
        via_sym = PeterssonValue(
            sym_norm.value / factor, sym_norm.error_estimate / abs(factor), "quadrature"
        )

        values = {"closed_form": closed, "gamma0_quadrature": gamma0, "symmetric": via_sym}
        names = list(values)
        failing = [
            [x, y]
            for i, x in enumerate(names)
            for y in names[i + 1:]
            if not _agree(values[x], values[y], rel)
        ]
        positive = mp.re(closed.value) > 0
        passed = not failing and positive
        return self.result(
            passed,
            "all three agree" if passed else f"disagreeing pairs {failing}",
            tolerance=rel,
            chi=chi.index,
            psi=psi.index,
            identity_factor=fmt(factor),
            **{k: fmt(v.value) for k, v in values.items()},
        )
