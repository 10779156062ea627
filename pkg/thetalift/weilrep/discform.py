"""
The discriminant form P'/P of an ideal lattice.

For P = a with Q(x) = N(x)/A and gcd(A, D) = 1 the group d^-1 a / a is
cyclic of order N = |D|, generated by g = A/sqrt(D). In the coordinate
r -> r g the form reads Q(r) = A r^2 / N mod 1 and (r, s) = 2 A r s / N mod 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple

from sympy import legendre_symbol

from thetalift.arith import as_discriminant
from thetalift.classgroup import ClassGroup, coprime_representative
from thetalift.exceptions import CosetTransportError
from thetalift.ideallat import CosetLabeling, dual_ideal, ideal_from_form

logger = logging.getLogger(__name__)

# b+ - b- for a positive definite binary lattice
SIGNATURE = 2


@dataclass(frozen=True)
class DiscriminantForm:
    """
    Cyclic discriminant form Z/N with Q(r) = A r^2 / N mod 1.

    Attributes:
        D: Fundamental discriminant, N = |D|
        A: Quadratic norm of the lattice, prime to D
    """

    D: int
    A: int

    def __post_init__(self):
        if gcd(self.A, self.D) != 1 or self.A <= 0:
            raise ValueError(f"A={self.A} must be positive and prime to D={self.D}")

    @property
    def N(self) -> int:
        return -self.D

    @property
    def order(self) -> int:
        return self.N

    @property
    def signature(self) -> int:
        return SIGNATURE

    @property
    def elements(self) -> range:
        return range(self.N)

    def norm_numerator(self, r: int) -> int:
        """N Q(r) mod N = A r^2 mod N."""
        return self.A * r * r % self.N

    def Q(self, r: int) -> Fraction:
        return Fraction(self.norm_numerator(r), self.N)

    def bilinear(self, r: int, s: int) -> Fraction:
        return Fraction(2 * self.A * r * s % self.N, self.N)

    def neg(self, r: int) -> int:
        return -r % self.N

    def element_order(self, r: int) -> int:
        return self.N // gcd(r, self.N)

    def supports(self, r: int, n: int) -> bool:
        """Whether exponent n/N may occur in component r (n = N Q(r) mod N)."""
        return (n - self.norm_numerator(r)) % self.N == 0


def build_discform(D: int, A: int) -> DiscriminantForm:
    """
    The discriminant form of Q(x) = N(x)/A on d^-1 a / a.

    Raises:
        ValueError: If gcd(A, D) != 1

    Example:
        >>> df = build_discform(-7, 1)
        >>> [str(df.Q(r)) for r in range(7)]
        ['0', '1/7', '4/7', '2/7', '2/7', '4/7', '1/7']
    """
    disc = as_discriminant(D)
    return DiscriminantForm(D=disc.D, A=int(A))


def discform_for_class(G: ClassGroup, cls: int) -> DiscriminantForm:
    """
    Discriminant form of the lattice of class cls, checked against the lattice.

    Uses the representative with leading coefficient prime to D. Every r g
    must lie in the dual lattice, carry label r and have Q(r g) = Q(r) mod 1.

    Raises:
        CosetTransportError: If the lattice model disagrees with the cyclic model
    """
    form = coprime_representative(G, cls, G.disc.N)
    df = build_discform(G.D, form.a)
    lattice = ideal_from_form(form)
    dual = dual_ideal(lattice)
    labeling = CosetLabeling(D=G.D, A=form.a)
    for r in df.elements:
        rep = labeling.representative(r)
        if not dual.contains(rep) or labeling.label(rep) != r:
            raise CosetTransportError(f"Generator multiple {r} g mislabeled for {form}")
        if (lattice.Q(rep) - df.Q(r)).denominator != 1:
            raise CosetTransportError(f"Q({r} g) = {lattice.Q(rep)} disagrees with {df.Q(r)}")
    logger.debug(f"Discriminant form of class {cls} ({form}): A={form.a}")
    return df


# =============================================================================
# ORTHOGONAL GROUP, SIGNS AND COUNTS
# =============================================================================

def orthogonal_group(df: DiscriminantForm) -> Tuple[int, ...]:
    """
    O(P'/P) as unit multipliers u with u^2 = 1 mod N; size 2^t.

    Example:
        >>> orthogonal_group(build_discform(-15, 1))
        (1, 4, 11, 14)
    """
    return tuple(u for u in range(1, df.N) if gcd(u, df.N) == 1 and u * u % df.N == 1)


def orbit(df: DiscriminantForm, r: int) -> List[int]:
    return sorted({u * r % df.N for u in orthogonal_group(df)})


def epsilon_signs(df: DiscriminantForm) -> Dict[int, int]:
    """
    epsilon_p = +1 when N Q restricted to the p-part represents the squares mod p.

    The p-part is generated by N/p, where N Q(N/p) = A (N/p)^2 mod N, so
    epsilon_p is the Legendre symbol (A | p).
    """
    return {p: int(legendre_symbol(df.A % p, p)) for p in as_discriminant(df.D).prime_factors}


def nu(df: DiscriminantForm, m: int) -> int:
    """
    #{r : N Q(r) = m mod N}.

    Example:
        >>> nu(build_discform(-23, 1), 1)
        2
    """
    m %= df.N
    return sum(1 for r in df.elements if df.norm_numerator(r) == m)
