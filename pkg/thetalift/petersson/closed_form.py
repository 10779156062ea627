"""
Closed-form Petersson products from eta values at CM points.

With inv(b) = log(v(b)^(1/2) |eta(tau(b))|^2) at the CM point of the class b,
so that log|v eta^4| = 2 inv(b):

    (Theta_P(psi), Theta_P(chi)), psi = chi          = -2 h sum_b psi(b) inv(b)
    (Theta_P(psi), Theta_P(chi)), chi = conj(psi)    = conj(psi)(a) times the above
    both cases at once (psi real, non-trivial)       = their sum
    otherwise                                        = 0

and for prime |D| the scalar norm (theta_chi, theta_chi) = -(4h/w^2) sum_a chi^2(a) inv(a).
"""

import logging
from functools import lru_cache
from typing import Dict, Optional

import mpmath as mp

from thetalift.classgroup import (
    ClassCharacter,
    ClassGroup,
    QuadForm,
    characters,
    cm_point,
    square_roots,
)
from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.exceptions import NonCuspidalError
from thetalift.numerics import euler_gamma, invariant_log_eta
from thetalift.petersson.pairing import PeterssonValue
from thetalift.vvtheta import lattice_discform
from thetalift.weilrep import orthogonal_group

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _class_invariant(form: QuadForm, ctx: PrecisionContext):
    return invariant_log_eta(cm_point(form, ctx).tau, ctx)


def class_invariant(G: ClassGroup, cls: int, ctx: Optional[PrecisionContext] = None):
    """inv(b) = log(v^(1/2) |eta|^2) at the CM point of class cls, with its tail bound."""
    ctx = ctx or DEFAULT_PRECISION
    return _class_invariant(G.form(cls), ctx)


def _character_log_sum(psi: ClassCharacter, ctx: PrecisionContext):
    """sum_b psi(b) inv(b) and the accumulated tail bound."""
    G = psi.group
    total = mp.mpc(0)
    tail = mp.mpf(0)
    with ctx.workprec():
        for b in range(G.h):
            inv = class_invariant(G, b, ctx)
            total += psi.complex_value(b, ctx.bits) * inv.log_abs
            tail += inv.tail_bound
    return total, tail


def closed_form_vv(
    psi: ClassCharacter, chi: ClassCharacter, a_class: int, ctx: Optional[PrecisionContext] = None
) -> PeterssonValue:
    """
    (Theta_P(., psi), Theta_P(., chi)) for P of class a_class.

    Raises:
        NonCuspidalError: If both characters are trivial
    """
    ctx = ctx or DEFAULT_PRECISION
    if psi.is_trivial() and chi.is_trivial():
        raise NonCuspidalError("Both characters trivial: the pairing of E_P with itself diverges")
    G = psi.group
    meta = {"pair": [psi.index, chi.index], "a_class": a_class}
    same = psi == chi
    conjugate = chi == psi.conjugate()
    with ctx.workprec():
        if not same and not conjugate:
            return PeterssonValue(mp.mpc(0), mp.mpf(0), "closed_form", dict(meta, case="zero"))

        log_sum, tail = _character_log_sum(psi, ctx)
        base = -2 * G.h * log_sum
        factor = mp.mpc(0)
        cases = []
        if same:
            factor += 1
            cases.append("equal")
        if conjugate:
            factor += psi.conjugate().complex_value(a_class, ctx.bits)
            cases.append("conjugate")
        value = factor * base
        error = abs(factor) * 2 * G.h * tail + abs(value) * mp.mpf(2) ** (-ctx.bits + 8)
    logger.debug(f"Closed form ({psi!r}, {chi!r}) = {mp.nstr(value, 12)}")
    return PeterssonValue(value, error, "closed_form", dict(meta, case="+".join(cases)))


def phi_value(
    G: ClassGroup, a_class: int, g_class: int, h_class: int, ctx: Optional[PrecisionContext] = None
) -> mp.mpf:
    """
    -4 log|(v1 v2)^(1/4) eta(tau1) eta(tau2)| - log(2 pi) + gamma.

    tau1 is the CM point of [h][g][a] and tau2 that of [g][h]^-1.
    """
    ctx = ctx or DEFAULT_PRECISION
    first = G.multiply(G.multiply(h_class, g_class), a_class)
    second = G.multiply(g_class, G.inverse(h_class))
    with ctx.workprec():
        inv1 = class_invariant(G, first, ctx).log_abs
        inv2 = class_invariant(G, second, ctx).log_abs
        return -2 * (inv1 + inv2) - mp.log(2 * mp.pi) + euler_gamma(ctx)


def phi_character_sum(
    psi: ClassCharacter, chi: ClassCharacter, a_class: int, ctx: Optional[PrecisionContext] = None
) -> mp.mpc:
    """sum_{g, h} psi(g) conj(chi)(h) phi_value(a, g, h)."""
    ctx = ctx or DEFAULT_PRECISION
    G = psi.group
    with ctx.workprec():
        total = mp.mpc(0)
        for g in range(G.h):
            for h in range(G.h):
                weight = psi.complex_value(g, ctx.bits) * mp.conj(chi.complex_value(h, ctx.bits))
                total += weight * phi_value(G, a_class, g, h, ctx)
        return total


def closed_form_scalar(chi: ClassCharacter, ctx: Optional[PrecisionContext] = None) -> PeterssonValue:
    """
    (theta_chi, theta_chi) = -(4h/w^2) sum_a chi^2(a) inv(a) for prime |D|.

    Raises:
        ValueError: If |D| is composite or chi is trivial
    """
    ctx = ctx or DEFAULT_PRECISION
    G = chi.group
    if G.disc.t != 1:
        raise ValueError(f"Scalar closed form needs a prime discriminant, got D={G.D}")
    if chi.is_trivial():
        raise ValueError("Scalar closed form needs a non-trivial character")
    w = G.disc.w_k
    with ctx.workprec():
        log_sum, tail = _character_log_sum(chi.square(), ctx)
        value = -mp.mpf(4 * G.h) / (w * w) * log_sum
        error = mp.mpf(4 * G.h) / (w * w) * tail + abs(value) * mp.mpf(2) ** (-ctx.bits + 8)
    return PeterssonValue(value, error, "closed_form", {"character": chi.index})


def sym_norm_identity(
    psi: ClassCharacter,
    a_class: int,
    norms: Optional[Dict[int, PeterssonValue]] = None,
    ctx: Optional[PrecisionContext] = None,
) -> PeterssonValue:
    """
    (Theta^sym(psi), Theta^sym(psi)) = nu w^2 sum_{chi^2 = psi} (1 + [psi real] conj(chi)^2(a)) (theta_chi, theta_chi)

    with nu = |O(P'/P)|.

    Args:
        psi: Character of the symmetric theta function
        a_class: Class of P
        norms: (theta_chi, theta_chi) by character index; closed_form_scalar when omitted
        ctx: Working precision
    """
    ctx = ctx or DEFAULT_PRECISION
    G = psi.group
    _, df = lattice_discform(G, a_class)
    nu_count = len(orthogonal_group(df))
    w = G.disc.w_k
    real = psi.is_real()
    with ctx.workprec():
        total = mp.mpc(0)
        error = mp.mpf(0)
        for chi in square_roots(psi, characters(G)):
            norm = norms[chi.index] if norms is not None else closed_form_scalar(chi, ctx)
            factor = mp.mpc(1)
            if real:
                factor += mp.conj(chi.square().complex_value(a_class, ctx.bits))
            total += factor * norm.value
            error += abs(factor) * norm.error_estimate
        scale = nu_count * w * w
    return PeterssonValue(
        total * scale, error * scale, "closed_form", {"character": psi.index, "nu": nu_count}
    )
