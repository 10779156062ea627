"""
Elements of k = Q(sqrt(D)) in the basis 1, omega with omega = (1 + sqrt(D))/2.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

import mpmath as mp

Number = Union[int, Fraction]


@dataclass(frozen=True)
class FieldElement:
    """
    x + y omega with rational x, y.

    omega satisfies omega^2 = omega + (D - 1)/4, so for D = 1 mod 4 the ring
    of integers is Z + Z omega.

    Example:
        >>> w = FieldElement(0, 1, -23)
        >>> (w * w.conj()).norm()
        Fraction(36, 1)
    """

    x: Fraction
    y: Fraction
    D: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def rational(cls, value: Number, D: int) -> "FieldElement":
        return cls(Fraction(value), Fraction(0), D)

    @classmethod
    def omega(cls, D: int) -> "FieldElement":
        return cls(Fraction(0), Fraction(1), D)

    @classmethod
    def sqrt_D(cls, D: int) -> "FieldElement":
        """sqrt(D) = 2 omega - 1."""
        return cls(Fraction(-1), Fraction(2), D)

    @classmethod
    def from_half_integers(cls, p: Number, q: Number, D: int) -> "FieldElement":
        """(p + q sqrt(D))/2."""
        p, q = Fraction(p), Fraction(q)
        return cls((p - q) / 2, q, D)

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.D != self.D:
                raise ValueError(f"Elements of Q(sqrt({self.D})) and Q(sqrt({other.D})) mixed")
            return other
        if isinstance(other, Rational):
            return FieldElement.rational(other, self.D)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.x + other.x, self.y + other.y, self.D)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.x, -self.y, self.D)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (x1 + y1 w)(x2 + y2 w) with w^2 = w + (D - 1)/4
        r = Fraction(self.D - 1, 4)
        x = self.x * other.x + self.y * other.y * r
        y = self.x * other.y + self.y * other.x + self.y * other.y
        return FieldElement(x, y, self.D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def conj(self) -> "FieldElement":
        """Complex conjugate; conj(omega) = 1 - omega."""
        return FieldElement(self.x + self.y, -self.y, self.D)

    def norm(self) -> Fraction:
        """N(x + y omega) = x^2 + x y + y^2 (1 - D)/4."""
        return self.x * self.x + self.x * self.y + self.y * self.y * Fraction(1 - self.D, 4)

    def trace(self) -> Fraction:
        return 2 * self.x + self.y

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero field element")
        c = self.conj()
        return FieldElement(c.x / n, c.y / n, self.D)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def to_complex(self, prec: int = 128) -> mp.mpc:
        with mp.workprec(prec):
            half_root = mp.sqrt(-self.D) / 2
            return mp.mpc(mp.mpf(self.x) + mp.mpf(self.y) / 2, mp.mpf(self.y) * half_root)

    def __str__(self) -> str:
        return f"{self.x} + {self.y}*w"


def inverse_different(D: int) -> FieldElement:
    """Generator 1/sqrt(D) of the inverse different."""
    return FieldElement.sqrt_D(D).inverse()
