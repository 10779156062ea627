"""
Identification of discriminant-group cosets across ideals of one genus.

For a lattice P = a_src with Q = N(x)/A the discriminant group
d^-1 a_src / a_src is cyclic of order |D|, generated by g = A/sqrt(D). An
ideal a_dst = b^2 a_src / N(b) with b integral and coprime to D has the same
completions as a_src at every p | D, so each lambda in d^-1 a_dst gets a
well-defined label in Z/|D|: the coset of d^-1 a_src / a_src that lambda
lies in locally at D.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from thetalift.exceptions import CosetTransportError
from thetalift.ideallat.field import FieldElement
from thetalift.ideallat.lattice import (
    IdealLattice,
    dual_ideal,
    index,
    intersect,
    lattice_sum,
    multiply,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransportedCoset:
    """
    The lambda in `ambient` that agree with `offset` modulo a_src at every p | D.

    Membership is tested as multiplier * (lambda - offset) in meet, where
    meet = a_src cap a_dst and the multiplier is prime to D and kills
    (a_src + a_dst)/meet.
    """

    ambient: IdealLattice
    sub: IdealLattice
    offset: FieldElement
    meet: IdealLattice
    multiplier: int

    def contains(self, lam: FieldElement) -> bool:
        if not self.ambient.contains(lam):
            return False
        return self.meet.contains((lam - self.offset) * self.multiplier)


def transported_ideal(a_src: IdealLattice, b: IdealLattice) -> IdealLattice:
    """
    b^2 a_src / N(b), carrying the quadratic norm of a_src.

    Raises:
        CosetTransportError: If N(b) shares a prime with D
    """
    N = -a_src.D
    norm_b = b.norm_Na
    if norm_b.denominator != 1 or gcd(int(norm_b), N) != 1:
        raise CosetTransportError(f"Ideal {b} of norm {norm_b} is not integral and prime to {N}")
    c = multiply(multiply(b, b), a_src).scale(Fraction(1) / norm_b)
    return c.with_q_norm(a_src.quadratic_norm)


def _validated_multiplier(
    a_src: IdealLattice, a_dst: IdealLattice, multiplier: Optional[int]
) -> tuple:
    N = -a_src.D
    total = lattice_sum(a_src, a_dst)
    meet = intersect(a_src, a_dst)
    idx = index(total, meet)
    if idx.denominator != 1 or gcd(int(idx), N) != 1:
        raise CosetTransportError(
            f"Index [a_src + a_dst : a_src cap a_dst] = {idx} is not prime to {N}"
        )
    M = int(idx) if multiplier is None else int(multiplier)
    if gcd(M, N) != 1:
        raise CosetTransportError(f"Multiplier {M} is not prime to {N}")
    if not meet.contains_lattice(total.scale(M)):
        raise CosetTransportError(f"Multiplier {M} does not kill (a_src + a_dst)/(a_src cap a_dst)")
    return meet, M


def coset_transport(
    a_src: IdealLattice,
    a_dst: IdealLattice,
    beta: FieldElement,
    multiplier: Optional[int] = None,
) -> TransportedCoset:
    """
    The coset of d^-1 a_dst matching beta + a_src locally at every p | D.

    Args:
        a_src: Source lattice P
        a_dst: Target lattice, b^2 a_src / N(b) for b prime to D
        beta: Element of d^-1 a_src
        multiplier: Optional M prime to D killing (a_src + a_dst)/(a_src cap a_dst);
            the index itself is used when omitted

    Raises:
        CosetTransportError: When the index or multiplier is not prime to |D|
    """
    if not dual_ideal(a_src).contains(beta):
        raise CosetTransportError(f"Offset {beta} is not in the dual of {a_src}")
    meet, M = _validated_multiplier(a_src, a_dst, multiplier)
    return TransportedCoset(
        ambient=dual_ideal(a_dst),
        sub=a_dst,
        offset=beta,
        meet=meet,
        multiplier=M,
    )


# =============================================================================
# LABELS
# =============================================================================

@dataclass(frozen=True)
class CosetLabeling:
    """
    Labels r in Z/|D| for elements of d^-1 a_dst, relative to the source P.

    r(lambda) = |D| (lambda, g) (2A)^-1 mod |D| with g = A/sqrt(D); the
    rational |D| (lambda, g) has denominator prime to D and is reduced with
    modular inverses.
    """

    D: int
    A: int

    @property
    def N(self) -> int:
        return -self.D

    @property
    def generator(self) -> FieldElement:
        """g = A/sqrt(D), generating d^-1 a_src / a_src."""
        return FieldElement.rational(self.A, self.D) / FieldElement.sqrt_D(self.D)

    def pairing_with_generator(self, lam: FieldElement) -> Fraction:
        """(lambda, g) = Tr(lambda conj(g))/A."""
        return (lam * self.generator.conj()).trace() / self.A

    def label(self, lam: FieldElement) -> int:
        N = self.N
        value = N * self.pairing_with_generator(lam)
        if gcd(value.denominator, N) != 1:
            raise CosetTransportError(f"Element {lam} is not integral at the primes of {N}")
        inverse = pow(value.denominator * 2 * self.A, -1, N)
        return value.numerator * inverse % N

    def representative(self, r: int) -> FieldElement:
        """r g, an element of the source coset with label r."""
        return self.generator * r


def labeling_for(a_src: IdealLattice) -> CosetLabeling:
    """Labeling attached to a source lattice whose quadratic norm A is prime to D."""
    A = a_src.quadratic_norm
    if A.denominator != 1 or gcd(int(A), -a_src.D) != 1:
        raise CosetTransportError(f"Quadratic norm {A} of {a_src} is not an integer prime to D")
    return CosetLabeling(D=a_src.D, A=int(A))
