"""
Characters of the class group.

A character is determined by an exponent vector (e_1, ..., e_r) on the
generators: psi(g_i) = e(e_i / d_i). Values are exact roots of unity
zeta_m^k with m the group exponent; complex numbers appear only when a
caller asks for them.

Canonical order: the index of a character is its exponent vector read as a
mixed-radix number, so the trivial character comes first and the rest
follow in lexicographic order of exponents.
"""

from dataclasses import dataclass
from itertools import product
from typing import List, Sequence, Tuple

import mpmath as mp

from thetalift.classgroup.cyclotomic import CyclotomicNumber
from thetalift.classgroup.group import ClassGroup


@dataclass(frozen=True, eq=False)
class ClassCharacter:
    """A character psi of Cl_k given by exponents on the generators of G."""

    group: ClassGroup
    exponents: Tuple[int, ...]

    def __post_init__(self):
        orders = self.group.cyclic_orders
        if len(self.exponents) != len(orders):
            raise ValueError(
                f"Character needs {len(orders)} exponents, got {len(self.exponents)}"
            )
        object.__setattr__(
            self, "exponents", tuple(e % d for e, d in zip(self.exponents, orders))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassCharacter):
            return NotImplemented
        return self.group is other.group and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash((self.group.D, self.exponents))

    @property
    def index(self) -> int:
        """Position in the canonical character list."""
        idx = 0
        for e, d in zip(self.exponents, self.group.cyclic_orders):
            idx = idx * d + e
        return idx

    @property
    def modulus(self) -> int:
        """The m with all values in mu_m (the group exponent)."""
        return self.group.exponent

    @property
    def order(self) -> int:
        m = self.modulus
        for k in range(1, m + 1):
            if m % k == 0 and all(self.exponent_at(x) * k % m == 0 for x in range(self.group.h)):
                return k
        return m

    def exponent_at(self, cls: int) -> int:
        """k with psi(cls) = e(k/m)."""
        m = self.modulus
        total = 0
        for e, d, x in zip(self.exponents, self.group.cyclic_orders, self.group.coordinates[cls]):
            total += e * x * (m // d)
        return total % m

    def label(self, cls: int) -> str:
        """Root-of-unity label 'k/m' of psi(cls)."""
        return f"{self.exponent_at(cls)}/{self.modulus}"

    def __call__(self, cls: int) -> CyclotomicNumber:
        return CyclotomicNumber.root_of_unity(self.modulus, self.exponent_at(cls))

    def complex_value(self, cls: int, prec: int = 128) -> mp.mpc:
        with mp.workprec(prec):
            return mp.expjpi(mp.mpf(2 * self.exponent_at(cls)) / self.modulus)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def is_real(self) -> bool:
        """True when psi equals its conjugate, i.e. psi^2 = 1."""
        return all(2 * e % d == 0 for e, d in zip(self.exponents, self.group.cyclic_orders))

    def conjugate(self) -> "ClassCharacter":
        return ClassCharacter(self.group, tuple(-e for e in self.exponents))

    def __mul__(self, other: "ClassCharacter") -> "ClassCharacter":
        if other.group is not self.group:
            raise ValueError("Characters belong to different class groups")
        return ClassCharacter(
            self.group, tuple(e + f for e, f in zip(self.exponents, other.exponents))
        )

    def square(self) -> "ClassCharacter":
        return self * self

    def __repr__(self) -> str:
        return f"ClassCharacter(D={self.group.D}, exponents={self.exponents})"


def characters(G: ClassGroup) -> List[ClassCharacter]:
    """
    All h characters of G in canonical order.

    Example:
        >>> len(characters(class_group(-23)))
        3
    """
    return [
        ClassCharacter(G, tuple(exponents))
        for exponents in product(*(range(d) for d in G.cyclic_orders))
    ]


def character_from_index(G: ClassGroup, index: int) -> ClassCharacter:
    """The character at a position of the canonical list."""
    if not 0 <= index < G.h:
        raise ValueError(f"Unknown character index: {index}. Valid: 0..{G.h - 1}")
    exponents = []
    for d in reversed(G.cyclic_orders):
        exponents.append(index % d)
        index //= d
    return ClassCharacter(G, tuple(reversed(exponents)))


def conjugation_representatives(chars: Sequence[ClassCharacter]) -> List[ClassCharacter]:
    """
    One character per pair {psi, conj(psi)}, the one with smaller index.

    Its size is (h + r)/2 with r the number of real characters.
    """
    return [psi for psi in chars if psi.index <= psi.conjugate().index]


def square_representatives(chars: Sequence[ClassCharacter]) -> List[ClassCharacter]:
    """Squares chi^2 of characters, one per conjugate pair, in canonical order."""
    squares = {chi.square().index: chi.square() for chi in chars}
    return conjugation_representatives([squares[i] for i in sorted(squares)])


def square_roots(psi: ClassCharacter, chars: Sequence[ClassCharacter]) -> List[ClassCharacter]:
    """All chi with chi^2 = psi."""
    return [chi for chi in chars if chi.square() == psi]


def orthogonality_sum(psi: ClassCharacter, chi: ClassCharacter) -> CyclotomicNumber:
    """(1/h) sum_x psi(x) conj(chi(x)), exactly."""
    G = psi.group
    total = CyclotomicNumber.rational(0, G.exponent)
    for x in range(G.h):
        total = total + psi(x) * chi(x).conjugate()
    return total / G.h
