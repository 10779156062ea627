"""
The class group Cl_k of an odd imaginary quadratic field.

Classes are indexed by their position in enumerate_reduced(D); index 0 is
always the principal class. The group law comes from Gauss composition and
is tabulated once per discriminant.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Dict, List, Sequence, Tuple

from thetalift.arith import (
    DiscriminantLike,
    FundamentalDiscriminant,
    ModularMatrix,
    as_discriminant,
    genus_prime_discriminants,
    igcdex,
)
from thetalift.classgroup.forms import QuadForm, compose, enumerate_reduced, reduce_form
from thetalift.exceptions import ConvergenceError

logger = logging.getLogger(__name__)


# =============================================================================
# GROUP STRUCTURE
# =============================================================================

def _element_order(table: Sequence[Sequence[int]], x: int) -> int:
    order, y = 1, x
    while y != 0:
        y = table[y][x]
        order += 1
    return order


def _span(table: Sequence[Sequence[int]], subgroup: Sequence[int], g: int, order: int) -> List[int]:
    """Subgroup generated by `subgroup` and g, where g^order is the first power inside it."""
    elements = []
    power = 0
    for _ in range(order):
        elements.extend(table[power][s] for s in subgroup)
        power = table[power][g]
    return sorted(set(elements))


def group_structure(table: Sequence[Sequence[int]]) -> Tuple[List[int], List[int]]:
    """
    Invariant-factor decomposition of a finite abelian group.

    The group is given by its multiplication table with identity 0. An
    element of maximal order generates a direct summand; repeating in the
    quotient, with each generator lifted to an element of the same exact
    order, yields a basis.

    Returns:
        (generators, cyclic_orders) with cyclic_orders d_1 | d_2 | ...

    Example:
        >>> group_structure([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        ([1], [3])
    """
    h = len(table)
    subgroup = [0]
    generators: List[int] = []
    orders: List[int] = []

    while len(subgroup) < h:
        members = set(subgroup)

        def quotient_order(x: int) -> int:
            k, y = 1, x
            while y not in members:
                y = table[y][x]
                k += 1
            return k

        best = max(range(h), key=lambda x: (quotient_order(x), -x))
        k = quotient_order(best)
        lifted = None
        for s in subgroup:
            candidate = table[best][s]
            if _element_order(table, candidate) == k:
                lifted = candidate
                break
        if lifted is None:
            raise ArithmeticError("Composition table is not an abelian group")
        generators.append(lifted)
        orders.append(k)
        subgroup = _span(table, subgroup, lifted, k)

    generators.reverse()
    orders.reverse()
    return generators, orders


# =============================================================================
# CLASS GROUP
# =============================================================================

@dataclass(eq=False)
class ClassGroup:
    """
    Cl_k with its composition table and generator coordinates.

    Attributes:
        disc: The discriminant
        classes: Reduced forms, principal first
        h: Class number
        cyclic_orders: Invariant factors d_1 | d_2 | ...
        generators: Class indices of the generators
        table: table[i][j] is the index of class_i * class_j
        coordinates: Exponents of every class on the generators
    """

    disc: FundamentalDiscriminant
    classes: List[QuadForm]
    table: List[List[int]]
    cyclic_orders: List[int]
    generators: List[int]
    coordinates: List[Tuple[int, ...]] = field(default_factory=list)
    _index: Dict[Tuple[int, int, int], int] = field(default_factory=dict, init=False, repr=False)
    _inverse: List[int] = field(default_factory=list, init=False, repr=False)

    def __post_init__(self):
        self._index = {f.as_tuple(): i for i, f in enumerate(self.classes)}
        self._inverse = [self.index_of(f.conjugate()) for f in self.classes]
        if not self.coordinates:
            self.coordinates = self._solve_coordinates()

    def _solve_coordinates(self) -> List[Tuple[int, ...]]:
        coords: List[Tuple[int, ...]] = [()] * self.h
        seen = set()
        for exponents in product(*(range(d) for d in self.cyclic_orders)):
            x = 0
            for g, e in zip(self.generators, exponents):
                x = self.multiply(x, self.power(g, e))
            if x in seen:
                raise ArithmeticError(f"Generators {self.generators} are not independent")
            seen.add(x)
            coords[x] = tuple(exponents)
        if len(seen) != self.h:
            raise ArithmeticError(f"Generators {self.generators} do not span Cl({self.disc.D})")
        return coords

    @property
    def D(self) -> int:
        return self.disc.D

    @property
    def h(self) -> int:
        return len(self.classes)

    @property
    def exponent(self) -> int:
        """Exponent of the group (1 for the trivial group)."""
        return self.cyclic_orders[-1] if self.cyclic_orders else 1

    def index_of(self, f: QuadForm) -> int:
        """Index of the class of an arbitrary form of discriminant D."""
        if f.disc != self.D:
            raise ValueError(f"Form {f} has discriminant {f.disc}, expected {self.D}")
        return self._index[reduce_form(f).as_tuple()]

    def form(self, i: int) -> QuadForm:
        return self.classes[i]

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self._inverse[i]

    def power(self, i: int, n: int) -> int:
        if n < 0:
            i, n = self.inverse(i), -n
        result = 0
        for _ in range(n % _element_order(self.table, i) if i else 0):
            result = self.multiply(result, i)
        return result

    def square(self, i: int) -> int:
        return self.multiply(i, i)

    def order(self, i: int) -> int:
        return _element_order(self.table, i)

    def class_action(self, h_class: int, a_class: int) -> int:
        """Index of [h]^2 [a]."""
        return self.multiply(self.square(h_class), a_class)

    def from_coordinates(self, exponents: Sequence[int]) -> int:
        x = 0
        for g, e in zip(self.generators, exponents):
            x = self.multiply(x, self.power(g, e))
        return x


@lru_cache(maxsize=32)
def _build_class_group(D: int) -> ClassGroup:
    disc = FundamentalDiscriminant(D)
    classes = enumerate_reduced(disc)
    index = {f.as_tuple(): i for i, f in enumerate(classes)}
    table = [
        [index[compose(f, g).as_tuple()] for g in classes]
        for f in classes
    ]
    generators, orders = group_structure(table)
    logger.info(f"Cl({D}): h={len(classes)}, structure {orders}")
    return ClassGroup(
        disc=disc,
        classes=classes,
        table=table,
        cyclic_orders=orders,
        generators=generators,
    )


def class_group(D: DiscriminantLike) -> ClassGroup:
    """
    Class group of discriminant D, cached per discriminant.

    Example:
        >>> G = class_group(-23)
        >>> G.h, G.cyclic_orders
        (3, [3])
    """
    return _build_class_group(as_discriminant(D).D)


def class_action(G: ClassGroup, h_class: int, a_class: int) -> int:
    """Index of [h]^2 [a] in the class list of G."""
    return G.class_action(h_class, a_class)


# =============================================================================
# GENUS THEORY
# =============================================================================

@dataclass(frozen=True)
class GenusData:
    """
    Genus structure of Cl_k.

    Attributes:
        squares: Class indices of the subgroup Cl^2
        ambiguous: Class indices x with x = x^-1
        genus_characters: Prime discriminants p* defining n -> (p* | n)
    """

    squares: Tuple[int, ...]
    ambiguous: Tuple[int, ...]
    genus_characters: Tuple[int, ...]

    @property
    def genus_count(self) -> int:
        return len(self.ambiguous)


def genus_data(G: ClassGroup) -> GenusData:
    """
    Squares, ambiguous classes and genus characters of G.

    Example:
        >>> genus_data(class_group(-15)).ambiguous
        (0, 1)
    """
    squares = tuple(sorted({G.square(x) for x in range(G.h)}))
    ambiguous = tuple(x for x in range(G.h) if G.inverse(x) == x)
    return GenusData(
        squares=squares,
        ambiguous=ambiguous,
        genus_characters=tuple(genus_prime_discriminants(G.disc)),
    )


def genus_of(G: ClassGroup, a_class: int) -> List[int]:
    """The coset a Cl^2, in class-index order."""
    return sorted({G.class_action(b, a_class) for b in range(G.h)})


# =============================================================================
# REPRESENTATIVES
# =============================================================================

def coprime_representative(
    G: ClassGroup, cls: int, M: int, search_bound: int = 64
) -> QuadForm:
    """
    A form in the class whose leading coefficient is coprime to M.

    Primitively represented values f(x, y) are scanned in increasing order
    of max(|x|, |y|); the first value coprime to M is moved to the leading
    coefficient by a matrix with first column (x, y), then b is normalized
    to (-a, a].

    Example:
        >>> coprime_representative(class_group(-23), 0, 23)
        QuadForm(a=1, b=1, c=6)
    """
    if M < 1:
        raise ValueError(f"Modulus must be positive, got {M}")
    f = G.form(cls)
    if gcd(f.a, M) == 1:
        return f

    candidates = []
    for radius in range(1, search_bound + 1):
        for x in range(-radius, radius + 1):
            for y in range(0, radius + 1):
                if max(abs(x), y) != radius or gcd(x, y) != 1:
                    continue
                value = f(x, y)
                if gcd(value, M) == 1:
                    candidates.append((value, x, y))
        if candidates:
            break
    if not candidates:
        raise ConvergenceError(
            f"No value coprime to {M} found for {f} within radius {search_bound}"
        )

    value, x, y = min(candidates)
    s, r_neg, _ = igcdex(x, y)
    # x s - r y = 1 with r = -r_neg
    g = ModularMatrix(x, int(-r_neg), y, int(s))
    moved = f.transform(g)
    a, b, c = moved.as_tuple()
    shift = (a - b) // (2 * a)
    result = QuadForm(a, b + 2 * shift * a, a * shift * shift + b * shift + c)
    if G.index_of(result) != cls:
        raise ArithmeticError(f"Representative {result} left the class of {f}")
    logger.debug(f"Coprime representative of {f} mod {M}: {result}")
    return result
