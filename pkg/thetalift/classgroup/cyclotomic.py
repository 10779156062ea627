"""
Exact arithmetic in cyclotomic fields Q(zeta_m).

Character values and every character-weighted theta coefficient live in
Q(zeta_m) for m the exponent of the class group. Elements are kept as
rational polynomials in zeta reduced modulo the cyclotomic polynomial, so
equality and vanishing tests are exact.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Dict, Tuple, Union

import mpmath as mp
from sympy import Poly, Symbol, cyclotomic_poly, totient

_X = Symbol("x")

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _phi_coefficients(m: int) -> Tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    poly = Poly(cyclotomic_poly(m, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CyclotomicNumber:
    """
    An element sum_k c_k zeta_m^k of Q(zeta_m) with zeta_m = e(1/m).

    The representation is canonical: exponents lie in [0, phi(m)) after
    reduction modulo Phi_m, and zero coefficients are dropped.

    Example:
        >>> z = CyclotomicNumber.root_of_unity(3, 1)
        >>> (z * z * z) == 1
        True
        >>> (1 + z + z * z).is_zero()
        True
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Dict[int, Scalar] = None):
        if m < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {m}")
        self.m = m
        self.coeffs = self._reduce(m, coeffs or {})

    @staticmethod
    def _reduce(m: int, coeffs: Dict[int, Scalar]) -> Dict[int, Fraction]:
        dense = [Fraction(0)] * m
        for k, c in coeffs.items():
            dense[k % m] += Fraction(c)
        phi = _phi_coefficients(m)
        degree = len(phi) - 1
        for top in range(m - 1, degree - 1, -1):
            lead = dense[top]
            if lead:
                shift = top - degree
                for j, p in enumerate(phi):
                    dense[shift + j] -= lead * p
        return {k: c for k, c in enumerate(dense[:degree]) if c}

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def root_of_unity(cls, m: int, k: int) -> "CyclotomicNumber":
        """zeta_m^k."""
        return cls(m, {k % m: 1})

    @classmethod
    def rational(cls, value: Scalar, m: int = 1) -> "CyclotomicNumber":
        return cls(m, {0: value})

    def lift(self, M: int) -> "CyclotomicNumber":
        """The same number written in Q(zeta_M), M a multiple of m."""
        if M % self.m != 0:
            raise ValueError(f"Cannot lift Q(zeta_{self.m}) into Q(zeta_{M})")
        step = M // self.m
        return CyclotomicNumber(M, {k * step: c for k, c in self.coeffs.items()})

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, Rational):
            return CyclotomicNumber.rational(Fraction(other), self.m)
        return NotImplemented

    def _common(self, other: "CyclotomicNumber"):
        if self.m == other.m:
            return self, other
        M = _lcm(self.m, other.m)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        x, y = self._common(other)
        coeffs = dict(x.coeffs)
        for k, c in y.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
        return CyclotomicNumber(x.m, coeffs)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.m, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            f = Fraction(other)
            return CyclotomicNumber(self.m, {k: c * f for k, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        x, y = self._common(other)
        coeffs: Dict[int, Fraction] = {}
        for k1, c1 in x.coeffs.items():
            for k2, c2 in y.coeffs.items():
                k = (k1 + k2) % x.m
                coeffs[k] = coeffs.get(k, 0) + c1 * c2
        return CyclotomicNumber(x.m, coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic number by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugate, zeta^k -> zeta^-k."""
        return CyclotomicNumber(self.m, {-k: c for k, c in self.coeffs.items()})

    # -------------------------------------------------------------------------
    # Predicates and rendering
    # -------------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return set(self.coeffs) <= {0}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def to_complex(self, prec: int = 128) -> mp.mpc:
        """Numerical value at the given precision in bits."""
        with mp.workprec(prec):
            total = mp.mpc(0)
            for k, c in self.coeffs.items():
                total += mp.mpf(c.numerator) / c.denominator * mp.expjpi(mp.mpf(2 * k) / self.m)
            return total

    @property
    def degree(self) -> int:
        return int(totient(self.m))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in sorted(self.coeffs.items()):
            terms.append(f"{c}" if k == 0 else f"{c}*z{self.m}^{k}")
        return " + ".join(terms)
