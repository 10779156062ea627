"""
Dedekind eta at high precision.

Only |eta| enters the closed-form Petersson norms. The product is evaluated
directly for Im(tau) >= 1/2; anywhere else tau is first moved into the
fundamental domain and |eta(gamma tau)| = |c tau + d|^(1/2) |eta(tau)| undoes
the move.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import mpmath as mp

from thetalift.arith import reduce_to_fundamental_domain
from thetalift.config import DEFAULT_PRECISION, PrecisionContext

logger = logging.getLogger(__name__)

MIN_IMAGINARY_PART = 0.5


@dataclass(frozen=True)
class EtaValue:
    """
    Result of an eta evaluation.

    Attributes:
        log_abs: log|eta(tau)|
        value: eta(tau), or None when only the absolute value was computed
        tail_bound: Bound on the truncation error of log_abs
        terms: Number of product factors used
    """

    log_abs: mp.mpf
    value: Optional[mp.mpc]
    tail_bound: mp.mpf
    terms: int


def dedekind_eta(tau, ctx: Optional[PrecisionContext] = None) -> EtaValue:
    """
    eta(tau) = e(tau/24) prod_{n >= 1} (1 - e(n tau)).

    The product is cut after ctx.eta_terms_for(Im tau) factors. With
    |q| = exp(-2 pi Im tau) the discarded factors change log|eta| by at most
    2 |q|^(M+1) / (1 - |q|).

    Raises:
        ValueError: If Im(tau) < 1/2
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        z = mp.mpc(tau)
        if z.imag < MIN_IMAGINARY_PART:
            raise ValueError(
                f"dedekind_eta needs Im(tau) >= {MIN_IMAGINARY_PART}, got {mp.nstr(z.imag, 8)}; "
                f"reduce tau first or use log_abs_eta"
            )
        q = mp.exp(2j * mp.pi * z)
        abs_q = abs(q)
        terms = ctx.eta_terms_for(float(z.imag))

        product = mp.mpc(1)
        q_power = mp.mpc(1)
        for _ in range(terms):
            q_power *= q
            product *= 1 - q_power

        tail = 2 * abs_q ** (terms + 1) / (1 - abs_q)
        value = mp.exp(2j * mp.pi * z / 24) * product
        log_abs = -2 * mp.pi * z.imag / 24 + mp.log(abs(product))
        return EtaValue(log_abs=log_abs, value=value, tail_bound=tail, terms=terms)


def log_abs_eta(tau, ctx: Optional[PrecisionContext] = None) -> EtaValue:
    """
    log|eta(tau)| for any tau in the upper half plane.

    Example:
        >>> float(log_abs_eta(1j).log_abs)  # doctest: +ELLIPSIS
        -0.263...
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        z = mp.mpc(tau)
        reduced, gamma = reduce_to_fundamental_domain(z)
        inner = dedekind_eta(reduced, ctx)
        # |eta(gamma z)| = |c z + d|^(1/2) |eta(z)|
        correction = mp.log(abs(gamma.j(z))) / 2
        return EtaValue(
            log_abs=inner.log_abs - correction,
            value=None,
            tail_bound=inner.tail_bound,
            terms=inner.terms,
        )


def invariant_log_eta(tau, ctx: Optional[PrecisionContext] = None) -> EtaValue:
    """
    log(v^(1/2) |eta(tau)|^2), an SL2(Z)-invariant function of tau = u + i v.

    log|v eta^4(tau)| is twice this value.
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        z = mp.mpc(tau)
        eta = log_abs_eta(z, ctx)
        return EtaValue(
            log_abs=mp.log(z.imag) / 2 + 2 * eta.log_abs,
            value=None,
            tail_bound=2 * eta.tail_bound,
            terms=eta.terms,
        )
