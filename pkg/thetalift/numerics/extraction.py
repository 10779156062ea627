"""
Fourier coefficients from samples on a horizontal line.

A holomorphic F(tau) = sum_{n >= 0} a(n) e(n tau / N) is sampled at M
equispaced points of Im(tau) = v0 over one period u in [0, N). A discrete
Fourier transform returns a(n) exp(-2 pi n v0 / N) up to aliasing, which is
then undone by rescaling.
"""

import logging
from dataclasses import dataclass
from math import ceil, log, pi
from typing import Callable, List, Optional

import mpmath as mp

from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.exceptions import AliasingError

logger = logging.getLogger(__name__)


@dataclass
class ExtractionResult:
    """
    Extracted coefficients a(0..n_top) of an expansion in e(n tau / N).

    Attributes:
        N: Exponent denominator
        coeffs: a(n) for 0 <= n <= n_top
        error_estimate: Bound estimate covering aliasing and rounding amplification
        v0: Height of the sample line
        samples: Number of samples
    """

    N: int
    coeffs: List[mp.mpc]
    error_estimate: mp.mpf
    v0: float
    samples: int

    @property
    def n_top(self) -> int:
        return len(self.coeffs) - 1


def max_sample_height(n_top_over_N: float, ctx: PrecisionContext) -> float:
    """Largest v0 keeping the rescaling factor exp(2 pi n v0 / N) below 2^(bits/2)."""
    if n_top_over_N <= 0:
        return ctx.sample_height
    return min(ctx.sample_height, ctx.bits * log(2) / 2 / (2 * pi * n_top_over_N))


def extract_coefficients(
    F: Callable[[mp.mpc], mp.mpc],
    N: int,
    n_max: int,
    v0: Optional[float] = None,
    ctx: Optional[PrecisionContext] = None,
    tolerance: Optional[float] = None,
) -> ExtractionResult:
    """
    Coefficients a(n), 0 <= n <= n_max * N, of F(tau) = sum a(n) e(n tau / N).

    Uses M = 4 * n_max * N samples. Bins above n_max * N are guard bins: for
    an F with no content there they vanish up to rounding, and their size
    measures the aliasing that leaks into the kept bins.

    Args:
        F: Function of tau
        N: Exponent denominator
        n_max: Bound on n / N
        v0: Sample height (ctx.sample_height when omitted)
        ctx: Precision context
        tolerance: When given, an error estimate above it raises AliasingError

    Example:
        >>> res = extract_coefficients(lambda t: mp.mpc(1), 1, 2)
        >>> [int(mp.nint(c.real)) for c in res.coeffs]
        [1, 0, 0]
    """
    ctx = ctx or DEFAULT_PRECISION
    if N < 1 or n_max < 0:
        raise ValueError(f"Need N >= 1 and n_max >= 0, got N={N}, n_max={n_max}")
    v0 = ctx.sample_height if v0 is None else v0
    if v0 <= 0:
        raise ValueError(f"Sample height must be positive, got {v0}")

    n_top = n_max * N
    M = max(4 * n_top, 4)

    with ctx.workprec():
        v = mp.mpf(v0)
        samples = []
        for j in range(M):
            u = mp.mpf(j * N) / M
            samples.append(mp.mpc(F(mp.mpc(u, v))))

        # raw[k] = (1/M) sum_j F(tau_j) e(-j k / M)
        step = mp.expjpi(mp.mpf(-2) / M)
        raw = []
        for k in range(M):
            root = step ** k
            acc = mp.mpc(0)
            w = mp.mpc(1)
            for s in samples:
                acc += s * w
                w *= root
            raw.append(acc / M)

        coeffs = [raw[n] * mp.exp(2 * mp.pi * n * v / N) for n in range(n_top + 1)]
        amplification = mp.exp(2 * mp.pi * n_top * v / N)
        guard = max((abs(raw[k]) for k in range(n_top + 1, M)), default=mp.mpf(0))
        scale = max((abs(s) for s in samples), default=mp.mpf(0))
        rounding = amplification * scale * mp.mpf(2) ** (-ctx.bits) * M
        error = guard * amplification + rounding

    logger.debug(
        f"Extracted {n_top + 1} coefficients (N={N}, M={M}, v0={v0}), "
        f"error estimate {mp.nstr(error, 5)}"
    )
    if tolerance is not None and error > tolerance:
        raise AliasingError(
            f"Extraction error estimate {mp.nstr(error, 5)} exceeds {tolerance} "
            f"(N={N}, n_max={n_max}, v0={v0})"
        )
    return ExtractionResult(N=N, coeffs=coeffs, error_estimate=error, v0=float(v0), samples=M)


def suggested_samples(n_max: int, N: int) -> int:
    """Sample count used by extract_coefficients."""
    return max(4 * n_max * N, 4)


def required_terms(v: float, bits: int, N: int = 1) -> int:
    """Numerator bound n with exp(-2 pi n v / N) < 2^-bits."""
    return int(ceil(bits * log(2) * N / (2 * pi * v))) + 1
