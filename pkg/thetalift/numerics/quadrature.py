"""
Quadrature over the standard fundamental domain of SL2(Z).

The truncated domain |u| <= 1/2, sqrt(1 - u^2) <= v <= T is covered by a
Gauss-Legendre product rule: for each u node the v interval is mapped onto
[-1, 1]. The part v > T is either supplied exactly by the caller or
integrated on extra panels with an analytic bound for what remains.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import mpmath as mp
import numpy as np

from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.exceptions import NonCuspidalError

logger = logging.getLogger(__name__)

# Decay lengths covered by explicit panels above T when no exact strip is given
PANEL_DECAY_LENGTHS = 36

# Newton iterations allowed when polishing double-precision nodes
NEWTON_STEPS = 8


@dataclass
class QuadratureResult:
    """Integral value with its error estimate."""

    value: mp.mpc
    error_estimate: mp.mpf
    nodes: Tuple[int, int]


@lru_cache(maxsize=16)
def gauss_legendre(n: int, bits: int = 53) -> Tuple[Tuple[mp.mpf, ...], Tuple[mp.mpf, ...]]:
    """
    Gauss-Legendre nodes and weights on [-1, 1], accurate to about 2^-bits.

    leggauss supplies double-precision nodes; above 53 bits each one is
    polished by Newton steps on P_n at the requested precision.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n)
    if bits <= 53:
        return tuple(mp.mpf(float(x)) for x in nodes), tuple(mp.mpf(float(w)) for w in weights)
    with mp.workprec(bits + 16):
        eps = mp.mpf(2) ** (-bits - 8)
        xs, ws = [], []
        for start in nodes:
            x = mp.mpf(float(start))
            for _ in range(NEWTON_STEPS):
                p, dp = _legendre_with_derivative(n, x)
                step = p / dp
                x -= step
                if abs(step) < eps:
                    break
            _, dp = _legendre_with_derivative(n, x)
            xs.append(x)
            ws.append(2 / ((1 - x * x) * dp * dp))
    return tuple(xs), tuple(ws)


def _legendre_with_derivative(n: int, x: mp.mpf) -> Tuple[mp.mpf, mp.mpf]:
    """P_n(x) and P_n'(x) by the three-term recurrence, n >= 1, |x| < 1."""
    previous, current = mp.mpf(1), x
    for k in range(2, n + 1):
        previous, current = current, ((2 * k - 1) * x * current - (k - 1) * previous) / k
    return current, n * (x * current - previous) / (x * x - 1)


def domain_nodes(
    ctx: PrecisionContext, n_u: Optional[int] = None, n_v: Optional[int] = None
) -> List[Tuple[mp.mpc, mp.mpf]]:
    """
    Points and weights of the product rule on the truncated fundamental domain.

    Weights include the hyperbolic measure du dv / v^2.
    """
    n_u = n_u or ctx.quad_nodes_u
    n_v = n_v or ctx.quad_nodes_v
    xu, wu = gauss_legendre(n_u, ctx.bits)
    xv, wv = gauss_legendre(n_v, ctx.bits)
    T = mp.mpf(ctx.height_T)
    points = []
    for x, w in zip(xu, wu):
        u = mp.mpf(x) / 2
        lower = mp.sqrt(1 - u * u)
        half_width = (T - lower) / 2
        for y, wy in zip(xv, wv):
            v = lower + half_width * (1 + mp.mpf(y))
            weight = mp.mpf(w) / 2 * mp.mpf(wy) * half_width / (v * v)
            points.append((mp.mpc(u, v), weight))
    return points


def _panel_nodes(lower: mp.mpf, upper: mp.mpf, n: int, bits: int) -> List[Tuple[mp.mpc, mp.mpf]]:
    """Product rule on the rectangle |u| <= 1/2, lower <= v <= upper."""
    xs, ws = gauss_legendre(n, bits)
    half_width = (upper - lower) / 2
    points = []
    for x, w in zip(xs, ws):
        u = mp.mpf(x) / 2
        for y, wy in zip(xs, ws):
            v = lower + half_width * (1 + mp.mpf(y))
            points.append((mp.mpc(u, v), mp.mpf(w) / 2 * mp.mpf(wy) * half_width / (v * v)))
    return points


def _integrate(integrand: Callable[[mp.mpc], mp.mpc], points) -> mp.mpc:
    total = mp.mpc(0)
    for tau, weight in points:
        total += integrand(tau) * weight
    return total


def petersson_quadrature(
    integrand: Callable[[mp.mpc], mp.mpc],
    ctx: Optional[PrecisionContext] = None,
    decay: float = 2 * float(mp.pi),
    strip: Optional[Callable[[mp.mpf], mp.mpc]] = None,
) -> QuadratureResult:
    """
    Integral of integrand(tau) du dv / v^2 over the fundamental domain.

    Args:
        integrand: The function to integrate; for a Petersson product this is
            <F(tau), G(tau)> v^k
        ctx: Precision and node counts
        decay: Constant c with |integrand| = O(exp(-c v)); must be positive
        strip: Exact value of the integral over v >= T as a function of T

    Returns:
        QuadratureResult; the error estimate is the change under halving the
        node counts plus the tail bound

    Raises:
        NonCuspidalError: If decay <= 0 (the integral does not converge)
    """
    ctx = ctx or DEFAULT_PRECISION
    if decay <= 0:
        raise NonCuspidalError(
            f"Integrand with decay constant {decay} is not integrable over the fundamental domain"
        )

    with ctx.workprec():
        T = mp.mpf(ctx.height_T)
        fine = _integrate(integrand, domain_nodes(ctx))
        coarse = _integrate(
            integrand,
            domain_nodes(ctx, max(ctx.quad_nodes_u // 2, 2), max(ctx.quad_nodes_v // 2, 2)),
        )

        tail = mp.mpf(0)
        if strip is not None:
            upper_part = strip(T)
        else:
            top = T + mp.mpf(PANEL_DECAY_LENGTHS) / decay
            width = mp.mpf(1) / decay
            upper_part = mp.mpc(0)
            lower = T
            while lower < top:
                upper = min(lower + 4 * width, top)
                upper_part += _integrate(integrand, _panel_nodes(lower, upper, 16, ctx.bits))
                lower = upper
            # |integrand| <= edge * exp(-decay (v - top)) above the top edge
            edge = max(abs(integrand(mp.mpc(u, top))) for u in (-0.5, -0.25, 0, 0.25, 0.5))
            tail = edge / (decay * top * top)

        value = fine + upper_part
        floor = abs(value) * mp.mpf(2) ** (-ctx.bits + 8)
        error = abs(fine - coarse) + tail + floor

    logger.debug(f"Quadrature value {mp.nstr(value, 12)}, error estimate {mp.nstr(error, 3)}")
    return QuadratureResult(value=value, error_estimate=error, nodes=(ctx.quad_nodes_u, ctx.quad_nodes_v))
