"""
Petersson inner products by quadrature over the fundamental domain of SL2(Z).

Every pairing is reduced to blocks: integral over F of
sum_j F_j(tau) conj(G_j(tau)) v^k du dv / v^2, where each block is a pair of
q-series in e(n tau / N). Vector-valued pairings use one block per
component; the Gamma_0(N) pairing unfolds to one block per coset with
F_gamma = f|gamma.

Above the height T the integral is summed exactly:

    int_{|u| <= 1/2} int_T^inf sum a_n conj(b_m) e((n - m) u / N) e^{-2 pi (n + m) v / N} v^(k-2) dv du
      = sum a_n conj(b_m) sinc((n - m)/N) c^(1-k) Gamma(k - 1, c T),   c = 2 pi (n + m) / N

which is E1(c T) at weight one.
"""

import logging
from dataclasses import dataclass, field
from math import ceil, log, pi, sqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath as mp

from thetalift.classgroup import ClassGroup
from thetalift.config import DEFAULT_PRECISION, PAIRING_METHODS, PrecisionContext
from thetalift.exceptions import NonCuspidalError
from thetalift.numerics import domain_nodes, petersson_quadrature
from thetalift.scalartheta import QExpansion
from thetalift.weilrep import LiftOperator, VectorValuedForm

logger = logging.getLogger(__name__)

# Lowest point of the fundamental domain
MIN_HEIGHT = sqrt(3) / 2

# Relative size of the discarded series terms at MIN_HEIGHT
TRUNCATION_BITS = 53


@dataclass
class PeterssonValue:
    """
    A Petersson product with its error estimate.

    Attributes:
        value: The product
        error_estimate: Estimated absolute error
        method: 'quadrature', 'gamma0_quadrature' or 'closed_form'
        meta: Annotations (characters, classes, node counts)
    """

    value: mp.mpc
    error_estimate: mp.mpf
    method: str
    meta: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        valid = ["quadrature", "gamma0_quadrature", "closed_form"]
        if self.method not in valid:
            raise ValueError(f"Unknown method: {self.method}. Valid: {valid}")

    def agrees_with(self, other: "PeterssonValue", rel: float = 0.0) -> bool:
        """Agreement within the combined error estimates, or within rel relative."""
        diff = abs(self.value - other.value)
        scale = max(abs(self.value), abs(other.value))
        return diff <= self.error_estimate + other.error_estimate or diff <= rel * scale

    def to_dict(self, digits: int = 20) -> Dict[str, Any]:
        return {
            "value": [mp.nstr(mp.re(self.value), digits), mp.nstr(mp.im(self.value), digits)],
            "error": mp.nstr(self.error_estimate, 5),
            "method": self.method,
            **self.meta,
        }


def pairing_truncation(bits: int = TRUNCATION_BITS) -> int:
    """
    Exponent bound K with exp(-2 pi K v) < 2^-bits at v = sqrt(3)/2.

    Example:
        >>> pairing_truncation()
        8
    """
    return int(ceil(bits * log(2) / (2 * pi * MIN_HEIGHT))) + 1


# =============================================================================
# BLOCKS
# =============================================================================

@dataclass
class _Block:
    """A pair of expansions over a common denominator, coefficients as mpc."""

    N: int
    f: Dict[int, mp.mpc]
    g: Dict[int, mp.mpc]
    prec: int


def _prepare(f: QExpansion, g: QExpansion, top: Optional[int], bits: int) -> _Block:
    if f.N != g.N:
        raise ValueError(f"Block denominators differ: {f.N} and {g.N}")
    prec = min(f.prec, g.prec) if top is None else min(f.prec, g.prec, top)
    fc = {n: c for n, c in f.complex_coefficients(bits).items() if n <= prec}
    gc = {n: c for n, c in g.complex_coefficients(bits).items() if n <= prec}
    return _Block(N=f.N, f=fc, g=gc, prec=prec)


def _check_cuspidal(blocks: Sequence[_Block]) -> None:
    for j, b in enumerate(blocks):
        if b.f.get(0, 0) != 0 and b.g.get(0, 0) != 0:
            raise NonCuspidalError(
                f"Block {j}: both inputs have a constant term; the Petersson integral diverges"
            )


def _series_values(coeffs: Dict[int, mp.mpc], q: mp.mpc, powers: Dict[int, mp.mpc]) -> mp.mpc:
    total = mp.mpc(0)
    for n, c in coeffs.items():
        if n not in powers:
            powers[n] = q ** n
        total += c * powers[n]
    return total


def _strip_integral(blocks: Sequence[_Block], T: mp.mpf, weight: int) -> mp.mpc:
    """Exact integral over |u| <= 1/2, v >= T."""
    total = mp.mpc(0)
    incomplete: Dict[Tuple[int, int], mp.mpf] = {}
    sinc: Dict[Tuple[int, int], mp.mpf] = {}
    for b in blocks:
        for n, a in b.f.items():
            for m, c in b.g.items():
                s = n + m
                if s == 0:
                    continue
                key_s = (b.N, s)
                if key_s not in incomplete:
                    rate = 2 * mp.pi * s / b.N
                    if weight == 1:
                        incomplete[key_s] = mp.e1(rate * T)
                    else:
                        incomplete[key_s] = rate ** (1 - weight) * mp.gammainc(weight - 1, rate * T)
                key_d = (b.N, n - m)
                if key_d not in sinc:
                    x = mp.mpf(n - m) / b.N
                    sinc[key_d] = mp.mpf(1) if n == m else mp.sin(mp.pi * x) / (mp.pi * x)
                total += a * mp.conj(c) * sinc[key_d] * incomplete[key_s]
    return total


def _decay(blocks: Sequence[_Block]) -> float:
    """Smallest 2 pi (n + m)/N with a_n b_m != 0 and n + m > 0."""
    rates = []
    for b in blocks:
        if not b.f or not b.g:
            continue
        s = min(b.f) + min(b.g)
        if s == 0:
            nonzero_f = [n for n in b.f if n > 0]
            nonzero_g = [m for m in b.g if m > 0]
            s = min(nonzero_f + nonzero_g, default=0)
        if s > 0:
            rates.append(2 * pi * s / b.N)
    return min(rates, default=2 * pi)


def _truncation_error(blocks: Sequence[_Block], weight: int, T: float) -> mp.mpf:
    """Bound on the effect of the discarded terms, from |coeffs| growth C n."""
    total = mp.mpf(0)
    v = mp.mpf(MIN_HEIGHT)
    for b in blocks:
        x = mp.exp(-2 * mp.pi * v / b.N)
        P = b.prec
        sup_f = sum(abs(c) * x ** n for n, c in b.f.items())
        sup_g = sum(abs(c) * x ** n for n, c in b.g.items())
        C = max([abs(c) / max(n, 1) for n, c in list(b.f.items()) + list(b.g.items())] or [1])
        tail = C * (P + 1) * x ** (P + 1) / (1 - x) ** 2
        total += tail * (sup_f + sup_g + tail)
    # measure of the fundamental domain is pi/3
    return total * mp.pi / 3 * mp.mpf(T) ** weight


def petersson_blocks(
    pairs: Sequence[Tuple[QExpansion, QExpansion]],
    weight: int = 1,
    ctx: Optional[PrecisionContext] = None,
    top: Optional[int] = None,
    method: str = "quadrature",
) -> PeterssonValue:
    """
    Integral over F of sum_j F_j conj(G_j) v^k du dv / v^2.

    Args:
        pairs: Blocks (F_j, G_j) of q-series
        weight: Weight k
        ctx: Precision and node counts
        top: Numerator bound applied to every block
        method: Tag of the returned value

    Raises:
        NonCuspidalError: If any block pairs two constant terms
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        blocks = [_prepare(f, g, top, ctx.bits) for f, g in pairs]
        _check_cuspidal(blocks)
        blocks = [b for b in blocks if b.f and b.g]
        if not blocks:
            return PeterssonValue(mp.mpc(0), mp.mpf(0), method)

        def integrand(tau: mp.mpc) -> mp.mpc:
            v = tau.imag
            total = mp.mpc(0)
            cache: Dict[int, Tuple[mp.mpc, Dict[int, mp.mpc]]] = {}
            for b in blocks:
                if b.N not in cache:
                    cache[b.N] = (mp.exp(2j * mp.pi * tau / b.N), {})
                q, powers = cache[b.N]
                total += _series_values(b.f, q, powers) * mp.conj(_series_values(b.g, q, powers))
            return total * v ** weight

        result = petersson_quadrature(
            integrand,
            ctx,
            decay=_decay(blocks),
            strip=lambda T: _strip_integral(blocks, T, weight),
        )
        error = result.error_estimate + _truncation_error(blocks, weight, ctx.height_T)
    logger.debug(f"Block pairing over {len(blocks)} blocks: {mp.nstr(result.value, 12)}")
    return PeterssonValue(
        value=result.value,
        error_estimate=error,
        method=method,
        meta={"nodes": list(result.nodes)},
    )


# =============================================================================
# PAIRINGS
# =============================================================================

def _vv_top(F: VectorValuedForm) -> int:
    return pairing_truncation() * F.N


def petersson_vv(
    F: VectorValuedForm, G: VectorValuedForm, ctx: Optional[PrecisionContext] = None
) -> PeterssonValue:
    """
    (F, G) = int_F sum_mu F_mu conj(G_mu) v^k du dv / v^2.

    Raises:
        NonCuspidalError: If neither form is cuspidal
    """
    if F.df != G.df:
        raise ValueError("Vector-valued forms for different discriminant forms")
    k = int(F.weight)
    return petersson_blocks(
        list(zip(F.components, G.components)), weight=k, ctx=ctx, top=_vv_top(F)
    )


def petersson_scalar_gamma0(
    f: QExpansion, g: QExpansion, G: ClassGroup, ctx: Optional[PrecisionContext] = None
) -> PeterssonValue:
    """
    (f, g) = int over Gamma_0(N) \\ H of f conj(g) v^k, unfolded over coset representatives.

    Both forms need a theta decomposition; f|gamma is read off the parent
    vector-valued theta functions.
    """
    ctx = ctx or DEFAULT_PRECISION
    if f.theta_decomposition is None or g.theta_decomposition is None:
        raise ValueError("Gamma_0(N) pairings need theta decompositions of both forms")
    op = LiftOperator(G, 0, ctx)
    pairs = [(op.slash_expansion(f, gamma), op.slash_expansion(g, gamma)) for gamma in op.reps]
    top = pairing_truncation() * op.N
    value = petersson_blocks(pairs, weight=int(f.weight), ctx=ctx, top=top, method="gamma0_quadrature")
    value.meta["cosets"] = len(op.reps)
    return value


def gram_matrix(
    forms: Sequence[VectorValuedForm], ctx: Optional[PrecisionContext] = None
) -> List[List[Optional[PeterssonValue]]]:
    """
    All pairings (F_i, F_j); entries pairing two non-cuspidal forms are None.

    Each form is evaluated once per quadrature node.
    """
    ctx = ctx or DEFAULT_PRECISION
    n = len(forms)
    if n == 0:
        return []
    top = _vv_top(forms[0])
    k = int(forms[0].weight)
    cuspidal = [F.is_cuspidal() for F in forms]

    with ctx.workprec():
        prepared = [
            [_prepare(c, c, top, ctx.bits).f for c in F.components] for F in forms
        ]
        N = forms[0].N

        def node_sums(points) -> List[List[mp.mpc]]:
            sums = [[mp.mpc(0)] * n for _ in range(n)]
            for tau, weight in points:
                q = mp.exp(2j * mp.pi * tau / N)
                powers: Dict[int, mp.mpc] = {}
                values = [[_series_values(comp, q, powers) for comp in P] for P in prepared]
                scale = weight * tau.imag ** k
                for i in range(n):
                    for j in range(i, n):
                        s = sum(x * mp.conj(y) for x, y in zip(values[i], values[j]))
                        sums[i][j] += s * scale
            return sums

        fine = node_sums(domain_nodes(ctx))
        coarse = node_sums(
            domain_nodes(ctx, max(ctx.quad_nodes_u // 2, 2), max(ctx.quad_nodes_v // 2, 2))
        )
        T = mp.mpf(ctx.height_T)
        matrix: List[List[Optional[PeterssonValue]]] = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                if not (cuspidal[i] or cuspidal[j]):
                    continue
                blocks = [
                    _Block(N=N, f=fi, g=gj, prec=top)
                    for fi, gj in zip(prepared[i], prepared[j])
                    if fi and gj
                ]
                strip = _strip_integral(blocks, T, k)
                value = fine[i][j] + strip
                floor = abs(value) * mp.mpf(2) ** (-ctx.bits + 8)
                error = abs(fine[i][j] - coarse[i][j]) + _truncation_error(blocks, k, ctx.height_T) + floor
                matrix[i][j] = PeterssonValue(value, error, "quadrature", {"pair": [i, j]})
                matrix[j][i] = PeterssonValue(mp.conj(value), error, "quadrature", {"pair": [j, i]})
    logger.info(f"Gram matrix of {n} forms (N={forms[0].N})")
    return matrix


def check_method(method: str) -> str:
    if method not in PAIRING_METHODS:
        raise ValueError(f"Unknown pairing method: {method}. Valid: {PAIRING_METHODS}")
    return method
