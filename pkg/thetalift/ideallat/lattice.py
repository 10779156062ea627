"""
Rank-2 lattices in k = Q(sqrt(D)) with exact Hermite normal form bases.

A lattice is stored by its HNF in omega-coordinates: the basis
e1 = a and e2 = b + c omega with a, c > 0 and 0 <= b < a, all rational.
Every operation (sum, product, intersection, duals, indices) stays in exact
rational arithmetic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, sqrt
from typing import Iterable, List, Optional, Sequence, Tuple

from thetalift.classgroup import QuadForm
from thetalift.ideallat.field import FieldElement, inverse_different

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _hnf(vectors: Iterable[Vector]) -> Tuple[Fraction, Fraction, Fraction]:
    """
    HNF (a, b, c) of the Z-span of rational 2-vectors.

    Raises:
        ValueError: When the span does not have rank 2
    """
    vectors = [(Fraction(x), Fraction(y)) for x, y in vectors]
    denom = 1
    for x, y in vectors:
        denom = _lcm(denom, _lcm(x.denominator, y.denominator))
    rows = [[int(x * denom), int(y * denom)] for x, y in vectors]

    # Euclid on the second coordinate
    pivot: Optional[List[int]] = None
    active = [r for r in rows if r[1] != 0]
    rest = [r for r in rows if r[1] == 0]
    while active:
        active.sort(key=lambda r: abs(r[1]))
        pivot = active[0]
        remaining = []
        for r in active[1:]:
            q = r[1] // pivot[1]
            reduced = [r[0] - q * pivot[0], r[1] - q * pivot[1]]
            if reduced[1] == 0:
                rest.append(reduced)
            else:
                remaining.append(reduced)
        if not remaining:
            break
        active = remaining + [pivot]
    if pivot is None:
        raise ValueError("Vectors do not span a rank-2 lattice")
    if pivot[1] < 0:
        pivot = [-pivot[0], -pivot[1]]

    a_int = 0
    for r in rest:
        a_int = gcd(a_int, abs(r[0]))
    if a_int == 0:
        raise ValueError("Vectors do not span a rank-2 lattice")
    b_int = pivot[0] % a_int
    return Fraction(a_int, denom), Fraction(b_int, denom), Fraction(pivot[1], denom)


@dataclass(frozen=True)
class IdealLattice:
    """
    A full-rank Z-lattice in Q(sqrt(D)).

    Attributes:
        D: The discriminant
        a, b, c: HNF entries, basis e1 = a, e2 = b + c omega
        q_norm: N(a) used for Q(x) = N(x)/q_norm; defaults to the covolume norm
    """

    D: int
    a: Fraction
    b: Fraction
    c: Fraction
    q_norm: Optional[Fraction] = None

    @classmethod
    def from_generators(
        cls, D: int, generators: Iterable[FieldElement], q_norm: Optional[Fraction] = None
    ) -> "IdealLattice":
        a, b, c = _hnf((g.x, g.y) for g in generators)
        return cls(D, a, b, c, q_norm)

    @property
    def basis(self) -> Tuple[FieldElement, FieldElement]:
        return (
            FieldElement(self.a, 0, self.D),
            FieldElement(self.b, self.c, self.D),
        )

    @property
    def norm_Na(self) -> Fraction:
        """Index relative to O_D; equals N(a) for fractional ideals."""
        return self.a * self.c

    @property
    def quadratic_norm(self) -> Fraction:
        return self.q_norm if self.q_norm is not None else self.norm_Na

    def with_q_norm(self, q_norm: Fraction) -> "IdealLattice":
        return IdealLattice(self.D, self.a, self.b, self.c, Fraction(q_norm))

    def same_lattice(self, other: "IdealLattice") -> bool:
        return (self.D, self.a, self.b, self.c) == (other.D, other.a, other.b, other.c)

    # -------------------------------------------------------------------------
    # Membership
    # -------------------------------------------------------------------------

    def coordinates(self, x: FieldElement) -> Tuple[Fraction, Fraction]:
        """(m, n) with x = m e1 + n e2."""
        n = x.y / self.c
        m = (x.x - n * self.b) / self.a
        return m, n

    def contains(self, x: FieldElement) -> bool:
        m, n = self.coordinates(x)
        return m.denominator == 1 and n.denominator == 1

    def contains_lattice(self, other: "IdealLattice") -> bool:
        return all(self.contains(e) for e in other.basis)

    def is_ideal(self) -> bool:
        """Closed under multiplication by omega."""
        w = FieldElement.omega(self.D)
        return all(self.contains(w * e) for e in self.basis)

    # -------------------------------------------------------------------------
    # Quadratic form
    # -------------------------------------------------------------------------

    def Q(self, x: FieldElement) -> Fraction:
        return x.norm() / self.quadratic_norm

    def bilinear(self, x: FieldElement, y: FieldElement) -> Fraction:
        """(x, y) = Q(x + y) - Q(x) - Q(y) = Tr(x conj(y))/q_norm."""
        return (x * y.conj()).trace() / self.quadratic_norm

    @property
    def gram(self) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
        e1, e2 = self.basis
        off = self.bilinear(e1, e2)
        return ((2 * self.Q(e1), off), (off, 2 * self.Q(e2)))

    # -------------------------------------------------------------------------
    # Lattice operations
    # -------------------------------------------------------------------------

    def scale(self, alpha) -> "IdealLattice":
        """alpha * L for a field element or rational alpha."""
        if not isinstance(alpha, FieldElement):
            alpha = FieldElement.rational(alpha, self.D)
        return IdealLattice.from_generators(self.D, [alpha * e for e in self.basis])

    def dual(self) -> "IdealLattice":
        """Dual lattice with respect to the bilinear form of Q."""
        e1, e2 = self.basis
        g = self.gram
        det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        # Columns of the inverse Gram matrix give the dual basis
        d1 = e1 * (g[1][1] / det) + e2 * (-g[1][0] / det)
        d2 = e1 * (-g[0][1] / det) + e2 * (g[0][0] / det)
        return IdealLattice.from_generators(self.D, [d1, d2], self.quadratic_norm)

    def __str__(self) -> str:
        return f"<{self.a}, {self.b} + {self.c}w>"


# =============================================================================
# IDEAL ARITHMETIC
# =============================================================================

def unit_ideal(D: int) -> IdealLattice:
    return IdealLattice(D, Fraction(1), Fraction(0), Fraction(1))


def ideal_from_form(f: QuadForm) -> IdealLattice:
    """
    The ideal Z a + Z (-b + sqrt(D))/2 of a form [a, b, c], with q_norm = a.

    Example:
        >>> ideal_from_form(QuadForm(1, 1, 6)).same_lattice(unit_ideal(-23))
        True
    """
    D = f.disc
    alpha = FieldElement.rational(f.a, D)
    beta = FieldElement.from_half_integers(-f.b, 1, D)
    return IdealLattice.from_generators(D, [alpha, beta], Fraction(f.a))


def form_from_ideal(ideal: IdealLattice) -> QuadForm:
    """
    [N(alpha), -Tr(alpha conj(beta)), N(beta)] / N(I) on the oriented HNF basis.

    Inverse of ideal_from_form up to SL2(Z) equivalence.
    """
    alpha, beta = ideal.basis
    n = ideal.norm_Na
    a = alpha.norm() / n
    b = -(alpha * beta.conj()).trace() / n
    c = beta.norm() / n
    for value in (a, b, c):
        if value.denominator != 1:
            raise ValueError(f"Lattice {ideal} is not a fractional ideal")
    return QuadForm(int(a), int(b), int(c))


def multiply(I: IdealLattice, J: IdealLattice) -> IdealLattice:
    """Product module generated by pairwise products."""
    _check_same_field(I, J)
    return IdealLattice.from_generators(I.D, [x * y for x in I.basis for y in J.basis])


def conj(I: IdealLattice) -> IdealLattice:
    return IdealLattice.from_generators(I.D, [e.conj() for e in I.basis], I.q_norm)


def lattice_sum(I: IdealLattice, J: IdealLattice) -> IdealLattice:
    _check_same_field(I, J)
    return IdealLattice.from_generators(I.D, list(I.basis) + list(J.basis))


def _coordinate_dual(L: IdealLattice) -> IdealLattice:
    """Dual under the standard pairing of omega-coordinates."""
    # Basis matrix rows (a, 0), (b, c); dual basis rows of (B^-1)^T
    a, b, c = L.a, L.b, L.c
    d1 = FieldElement(1 / a, -b / (a * c), L.D)
    d2 = FieldElement(0, 1 / c, L.D)
    return IdealLattice.from_generators(L.D, [d1, d2])


def intersect(I: IdealLattice, J: IdealLattice) -> IdealLattice:
    """I cap J, via (I cap J)^* = I^* + J^*."""
    _check_same_field(I, J)
    return _coordinate_dual(lattice_sum(_coordinate_dual(I), _coordinate_dual(J)))


def index(big: IdealLattice, small: IdealLattice) -> Fraction:
    """
    [big : small] for small contained in big.

    Example:
        >>> index(unit_ideal(-23), unit_ideal(-23).scale(5))
        Fraction(25, 1)
    """
    if not big.contains_lattice(small):
        raise ValueError(f"{small} is not contained in {big}")
    return small.norm_Na / big.norm_Na


def ideal_sum(I: IdealLattice, J: IdealLattice) -> IdealLattice:
    """Alias of lattice_sum under the name used for ideals."""
    return lattice_sum(I, J)


def dual_ideal(I: IdealLattice) -> IdealLattice:
    """d^-1 I with d = (sqrt(D)), carrying the q_norm of I."""
    return I.scale(inverse_different(I.D)).with_q_norm(I.quadratic_norm)


def _check_same_field(I: IdealLattice, J: IdealLattice) -> None:
    if I.D != J.D:
        raise ValueError(f"Lattices of Q(sqrt({I.D})) and Q(sqrt({J.D})) mixed")


# =============================================================================
# ENUMERATION
# =============================================================================

def enumerate_coordinates(
    L: IdealLattice, offset: FieldElement, bound: Fraction
) -> List[Tuple[int, int, FieldElement]]:
    """
    All (m, n, lambda) with lambda = offset + m e1 + n e2 and Q(lambda) <= bound.

    The box comes from N(X + Y omega) = (X + Y/2)^2 + |D| Y^2 / 4; floating
    point only sizes the box, membership is decided exactly.
    """
    bound = Fraction(bound)
    if bound < 0:
        return []
    N = -L.D
    limit = bound * L.quadratic_norm
    y_radius = sqrt(4 * float(limit) / N) + 1e-9
    n_lo = floor((-y_radius - float(offset.y)) / float(L.c)) - 1
    n_hi = ceil((y_radius - float(offset.y)) / float(L.c)) + 1

    found = []
    for n in range(n_lo, n_hi + 1):
        Y = offset.y + n * L.c
        rest = limit - Y * Y * Fraction(N, 4)
        if rest < 0:
            continue
        x_radius = sqrt(float(rest)) + 1e-9
        # X + Y/2 = offset.x + n b + m a + Y/2
        center = float(offset.x + n * L.b + Y / 2)
        m_lo = floor((-x_radius - center) / float(L.a)) - 1
        m_hi = ceil((x_radius - center) / float(L.a)) + 1
        for m in range(m_lo, m_hi + 1):
            lam = FieldElement(offset.x + m * L.a + n * L.b, Y, L.D)
            if lam.norm() <= limit:
                found.append((m, n, lam))
    found.sort(key=lambda t: (t[2].norm(), t[1], t[0]))
    return found


def enumerate_by_norm(
    L: IdealLattice, offset: Optional[FieldElement], bound: Fraction
) -> List[FieldElement]:
    """
    All lambda in offset + L with Q(lambda) <= bound, sorted by norm.

    Example:
        >>> len(enumerate_by_norm(unit_ideal(-23), None, 1))
        3
    """
    if offset is None:
        offset = FieldElement.rational(0, L.D)
    result = [lam for _, _, lam in enumerate_coordinates(L, offset, bound)]
    logger.debug(f"{len(result)} vectors of Q <= {bound} in {offset} + {L}")
    return result


def representation_counts(L: IdealLattice, n_max: int) -> List[int]:
    """counts[n] = #{lambda in L : Q(lambda) = n} for n <= n_max, Q integral on L."""
    counts = [0] * (n_max + 1)
    for lam in enumerate_by_norm(L, None, Fraction(n_max)):
        q = L.Q(lam)
        if q.denominator != 1:
            raise ValueError(f"Q is not integral on {L}: Q({lam}) = {q}")
        counts[int(q)] += 1
    return counts


def sample_vectors(L: IdealLattice, count: int, radius: int = 6) -> Sequence[FieldElement]:
    """Deterministic spread of lattice vectors m e1 + n e2 with |m|, |n| <= radius."""
    e1, e2 = L.basis
    vectors = []
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            vectors.append(e1 * m + e2 * n)
    step = max(1, len(vectors) // max(count, 1))
    return vectors[::step][:count]
