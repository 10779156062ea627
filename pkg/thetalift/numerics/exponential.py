"""
The exponential e(x) = exp(2 pi i x) and the Euler constant.
"""

import logging
from typing import Optional

import mpmath as mp

from thetalift.config import DEFAULT_PRECISION, EULER_GAMMA_DIGITS, PrecisionContext

logger = logging.getLogger(__name__)


def e_of(x, ctx: Optional[PrecisionContext] = None) -> mp.mpc:
    """
    e(x) = exp(2 pi i x) at the working precision.

    Example:
        >>> e_of(mp.mpf(1) / 2)
        mpc(real='-1.0', imag='0.0')
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        if isinstance(x, (mp.mpc, complex)):
            return mp.exp(2j * mp.pi * mp.mpc(x))
        return mp.expjpi(2 * mp.mpf(x))


def euler_gamma(ctx: Optional[PrecisionContext] = None) -> mp.mpf:
    """
    Euler-Mascheroni constant at the working precision.

    Cross-checked against a 50-digit literal; a mismatch means a broken
    mpmath installation.
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        gamma = +mp.euler
        reference = mp.mpf(EULER_GAMMA_DIGITS)
        slack = max(mp.mpf(10) ** -48, mp.mpf(2) ** (-ctx.bits + 4))
        if abs(gamma - reference) > slack:
            raise ArithmeticError(f"Euler constant {gamma} disagrees with reference {reference}")
        return gamma


def gamma_prime_one(ctx: Optional[PrecisionContext] = None) -> mp.mpf:
    """Gamma'(1) = -gamma."""
    return -euler_gamma(ctx)
