"""
Truncated Fourier expansions in e(n tau / N).

Coefficients are exact (int, Fraction, CyclotomicNumber) whenever they
come from theta constructions and turn into mpmath complex numbers only
when mixed with numerical data or evaluated.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import mpmath as mp

from thetalift.classgroup import CyclotomicNumber
from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.exceptions import ConvergenceError

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction, CyclotomicNumber, mp.mpf, mp.mpc]


# =============================================================================
# COEFFICIENT ARITHMETIC
# =============================================================================

def is_exact(c: Coefficient) -> bool:
    return isinstance(c, (Rational, CyclotomicNumber))


def to_complex(c: Coefficient, prec: int = 128) -> mp.mpc:
    """Numerical value of a coefficient."""
    if isinstance(c, CyclotomicNumber):
        return c.to_complex(prec)
    with mp.workprec(prec):
        if isinstance(c, Rational):
            return mp.mpc(mp.mpf(c.numerator) / c.denominator)
        return mp.mpc(c)


def coeff_add(x: Coefficient, y: Coefficient, prec: int = 128) -> Coefficient:
    if is_exact(x) and is_exact(y):
        return x + y
    return to_complex(x, prec) + to_complex(y, prec)


def coeff_mul(x: Coefficient, y: Coefficient, prec: int = 128) -> Coefficient:
    if is_exact(x) and is_exact(y):
        return x * y
    return to_complex(x, prec) * to_complex(y, prec)


def coeff_conj(c: Coefficient) -> Coefficient:
    if isinstance(c, CyclotomicNumber):
        return c.conjugate()
    if isinstance(c, Rational):
        return c
    return mp.conj(c)


def coeff_is_zero(c: Coefficient, tol: float = 0.0) -> bool:
    if isinstance(c, CyclotomicNumber):
        return c.is_zero()
    if isinstance(c, Rational):
        return c == 0
    return abs(c) <= tol


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# =============================================================================
# Q-EXPANSIONS
# =============================================================================

@dataclass
class QExpansion:
    """
    sum_{0 <= n <= prec} coeffs[n] e(n tau / N).

    Attributes:
        N: Exponent denominator
        coeffs: Sparse map n -> coefficient; absent entries are zero
        prec: Every coefficient with n <= prec is known
        weight: Weight of the modular form
        disc: Discriminant the form belongs to, when any
        meta: Free-form annotations (class, character, level)
        theta_decomposition: Exact expression as sum_c coeff_c theta_c over
            class indices c, when known
    """

    N: int
    coeffs: Dict[int, Coefficient]
    prec: int
    weight: Fraction = Fraction(1)
    disc: Optional[int] = None
    meta: Dict[str, Any] = field(default_factory=dict)
    theta_decomposition: Optional[Dict[int, Coefficient]] = None

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"Exponent denominator must be positive, got {self.N}")
        if self.prec < 0:
            raise ValueError(f"Precision must be non-negative, got {self.prec}")
        self.coeffs = {
            n: c for n, c in self.coeffs.items() if n <= self.prec and not coeff_is_zero(c)
        }
        if any(n < 0 for n in self.coeffs):
            raise ValueError("Expansions are holomorphic at the cusp: negative exponents found")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_list(cls, values: Iterable[Coefficient], N: int = 1, **kwargs) -> "QExpansion":
        values = list(values)
        return cls(N=N, coeffs=dict(enumerate(values)), prec=len(values) - 1, **kwargs)

    @classmethod
    def zero(cls, N: int = 1, prec: int = 0, **kwargs) -> "QExpansion":
        return cls(N=N, coeffs={}, prec=prec, **kwargs)

    # -------------------------------------------------------------------------
    # Access
    # -------------------------------------------------------------------------

    def coefficient(self, n: int) -> Coefficient:
        if n > self.prec:
            raise ValueError(f"Coefficient {n} requested beyond precision {self.prec}")
        return self.coeffs.get(n, 0)

    def coefficient_list(self, n_top: Optional[int] = None) -> List[Coefficient]:
        n_top = self.prec if n_top is None else n_top
        return [self.coefficient(n) for n in range(n_top + 1)]

    @property
    def constant_term(self) -> Coefficient:
        return self.coeffs.get(0, 0)

    def is_cuspidal_at_infinity(self, tol: float = 0.0) -> bool:
        return coeff_is_zero(self.constant_term, tol)

    def support(self) -> List[int]:
        return sorted(self.coeffs)

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs.values())

    def complex_coefficients(self, prec: int = 128) -> Dict[int, mp.mpc]:
        return {n: to_complex(c, prec) for n, c in self.coeffs.items()}

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def rescale(self, N: int) -> "QExpansion":
        """The same function written over denominator N, a multiple of self.N."""
        if N % self.N != 0:
            raise ValueError(f"Cannot rewrite denominator {self.N} as {N}")
        k = N // self.N
        return QExpansion(
            N=N,
            coeffs={n * k: c for n, c in self.coeffs.items()},
            prec=self.prec * k + (k - 1),
            weight=self.weight,
            disc=self.disc,
            meta=dict(self.meta),
            theta_decomposition=self.theta_decomposition,
        )

    def _aligned(self, other: "QExpansion") -> Tuple["QExpansion", "QExpansion"]:
        if self.N == other.N:
            return self, other
        L = _lcm(self.N, other.N)
        return self.rescale(L), other.rescale(L)

    def __add__(self, other: "QExpansion") -> "QExpansion":
        if not isinstance(other, QExpansion):
            return NotImplemented
        x, y = self._aligned(other)
        coeffs = dict(x.coeffs)
        for n, c in y.coeffs.items():
            coeffs[n] = coeff_add(coeffs.get(n, 0), c)
        decomposition = None
        if x.theta_decomposition is not None and y.theta_decomposition is not None:
            decomposition = dict(x.theta_decomposition)
            for cls, c in y.theta_decomposition.items():
                decomposition[cls] = coeff_add(decomposition.get(cls, 0), c)
            decomposition = {k: v for k, v in decomposition.items() if not coeff_is_zero(v)}
        return QExpansion(
            N=x.N,
            coeffs=coeffs,
            prec=min(x.prec, y.prec),
            weight=x.weight,
            disc=x.disc if x.disc is not None else y.disc,
            meta={},
            theta_decomposition=decomposition,
        )

    def scale(self, factor: Coefficient) -> "QExpansion":
        decomposition = None
        if self.theta_decomposition is not None:
            decomposition = {
                cls: coeff_mul(c, factor) for cls, c in self.theta_decomposition.items()
            }
        return QExpansion(
            N=self.N,
            coeffs={n: coeff_mul(c, factor) for n, c in self.coeffs.items()},
            prec=self.prec,
            weight=self.weight,
            disc=self.disc,
            meta=dict(self.meta),
            theta_decomposition=decomposition,
        )

    def __mul__(self, factor: Coefficient) -> "QExpansion":
        return self.scale(factor)

    __rmul__ = __mul__

    def __neg__(self) -> "QExpansion":
        return self.scale(-1)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return self + (-other)

    def conjugate(self) -> "QExpansion":
        """Coefficientwise complex conjugate."""
        decomposition = None
        if self.theta_decomposition is not None:
            decomposition = {cls: coeff_conj(c) for cls, c in self.theta_decomposition.items()}
        return QExpansion(
            N=self.N,
            coeffs={n: coeff_conj(c) for n, c in self.coeffs.items()},
            prec=self.prec,
            weight=self.weight,
            disc=self.disc,
            meta=dict(self.meta),
            theta_decomposition=decomposition,
        )

    def truncate(self, prec: int) -> "QExpansion":
        return QExpansion(
            N=self.N,
            coeffs={n: c for n, c in self.coeffs.items() if n <= prec},
            prec=min(prec, self.prec),
            weight=self.weight,
            disc=self.disc,
            meta=dict(self.meta),
            theta_decomposition=self.theta_decomposition,
        )

    def equals(self, other: "QExpansion", n_top: Optional[int] = None, tol: float = 0.0) -> bool:
        """Coefficientwise equality up to n_top (exact unless tol > 0)."""
        x, y = self._aligned(other)
        top = min(x.prec, y.prec) if n_top is None else n_top * x.N // self.N
        for n in range(top + 1):
            diff = coeff_add(x.coefficient(n), coeff_mul(y.coefficient(n), -1))
            if not coeff_is_zero(diff, tol):
                return False
        return True

    # -------------------------------------------------------------------------
    # Evaluation
    # -------------------------------------------------------------------------

    def tail_bound(self, tau, ctx: Optional[PrecisionContext] = None) -> mp.mpf:
        """
        Bound on the discarded terms, assuming |a(n)| <= C n beyond prec.

        C is the largest |a(n)|/n seen up to prec.
        """
        ctx = ctx or DEFAULT_PRECISION
        with ctx.workprec():
            x = mp.exp(-2 * mp.pi * mp.mpc(tau).imag / self.N)
            if x >= 1:
                return mp.inf
            C = mp.mpf(0)
            for n, c in self.coeffs.items():
                C = max(C, abs(to_complex(c, ctx.bits)) / max(n, 1))
            if C == 0:
                C = mp.mpf(1)
            P = self.prec
            return C * (P + 1) * x ** (P + 1) / (1 - x) ** 2

    def evaluate_with_error(self, tau, ctx: Optional[PrecisionContext] = None) -> Tuple[mp.mpc, mp.mpf]:
        ctx = ctx or DEFAULT_PRECISION
        with ctx.workprec():
            z = mp.mpc(tau)
            if z.imag <= 0:
                raise ValueError(f"tau must lie in the upper half plane, got {tau}")
            q = mp.exp(2j * mp.pi * z / self.N)
            total = mp.mpc(0)
            power = mp.mpc(1)
            last = 0
            for n in sorted(self.coeffs):
                power *= q ** (n - last)
                last = n
                total += to_complex(self.coeffs[n], ctx.bits) * power
            return total, self.tail_bound(z, ctx)

    def evaluate(
        self, tau, ctx: Optional[PrecisionContext] = None, tolerance: Optional[float] = None
    ) -> mp.mpc:
        """
        Value at tau from the truncated series.

        Raises:
            ConvergenceError: If the tail bound exceeds tolerance
        """
        value, tail = self.evaluate_with_error(tau, ctx)
        if tolerance is not None and tail > tolerance:
            raise ConvergenceError(
                f"Truncation at {self.prec}/{self.N} leaves tail {mp.nstr(tail, 3)} "
                f"above {tolerance} at tau={mp.nstr(mp.mpc(tau), 6)}"
            )
        return value


def evaluate(f: QExpansion, tau, ctx: Optional[PrecisionContext] = None, tolerance=None) -> mp.mpc:
    """Value of a q-expansion at tau, see QExpansion.evaluate."""
    return f.evaluate(tau, ctx, tolerance)
