"""
Discriminant classification and Kronecker symbols.

Only odd negative fundamental discriminants are admitted: D < 0,
D = 1 mod 4 and |D| squarefree.
"""

from dataclasses import dataclass, field
from typing import List, Tuple, Union

from sympy import factorint
from sympy.ntheory import jacobi_symbol

from thetalift.exceptions import InvalidDiscriminantError


def is_fundamental(D: int) -> bool:
    """
    Check whether D is an odd negative fundamental discriminant.

    Example:
        >>> is_fundamental(-23)
        True
        >>> is_fundamental(-75)
        False
    """
    if D >= 0 or D % 4 != 1:
        return False
    return all(e == 1 for e in factorint(-D).values())


@dataclass(frozen=True)
class FundamentalDiscriminant:
    """
    An odd negative fundamental discriminant with its prime data.

    Attributes:
        D: The discriminant
        prime_factors: Sorted primes dividing |D|
        t: Number of distinct prime divisors
        w_k: Number of roots of unity in Q(sqrt(D))
    """

    D: int
    prime_factors: Tuple[int, ...] = field(init=False)
    t: int = field(init=False)
    w_k: int = field(init=False)

    def __post_init__(self):
        D = int(self.D)
        if D >= 0:
            raise InvalidDiscriminantError(D, "must be negative")
        if D % 2 == 0:
            raise InvalidDiscriminantError(D, "even discriminants are not supported")
        if D % 4 != 1:
            raise InvalidDiscriminantError(D, "must be congruent to 1 mod 4")
        factors = factorint(-D)
        if any(e > 1 for e in factors.values()):
            raise InvalidDiscriminantError(D, "|D| is not squarefree")

        primes = tuple(sorted(factors))
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "prime_factors", primes)
        object.__setattr__(self, "t", len(primes))
        object.__setattr__(self, "w_k", 6 if D == -3 else 2)

    @property
    def N(self) -> int:
        """Level |D|."""
        return -self.D

    def __int__(self) -> int:
        return self.D


DiscriminantLike = Union[int, FundamentalDiscriminant]


def as_discriminant(D: DiscriminantLike) -> FundamentalDiscriminant:
    """Coerce an integer to a validated FundamentalDiscriminant."""
    if isinstance(D, FundamentalDiscriminant):
        return D
    return FundamentalDiscriminant(int(D))


def kronecker(a: int, n: int) -> int:
    """
    Kronecker symbol (a | n).

    Completely multiplicative in n, with (a | -1) = -1 for a < 0 and
    (a | 2) given by a mod 8.

    Example:
        >>> kronecker(-23, 2)
        1
        >>> kronecker(-23, 23)
        0
    """
    if n == 0:
        return 1 if abs(a) == 1 else 0

    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result

    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result

    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))


def chi_D(n: int, D: DiscriminantLike) -> int:
    """
    Primitive quadratic character of conductor |D|, n -> (D | n).

    Example:
        >>> chi_D(-1, -23)
        -1
    """
    return kronecker(int(D), n)


def genus_prime_discriminants(D: DiscriminantLike) -> List[int]:
    """
    Prime discriminants p* = (-1 | p) p whose product is D.

    Example:
        >>> genus_prime_discriminants(-15)
        [-3, 5]
    """
    disc = as_discriminant(D)
    return [p if p % 4 == 1 else -p for p in disc.prime_factors]


def class_number_oracle(D: DiscriminantLike) -> int:
    """
    Class number from the analytic class number formula.

    h = -(w_k / (2|D|)) * sum_{n=1}^{|D|-1} chi_D(n) n, evaluated exactly.
    """
    disc = as_discriminant(D)
    total = sum(chi_D(n, disc.D) * n for n in range(1, disc.N))
    numerator = -disc.w_k * total
    if numerator % (2 * disc.N) != 0:
        raise ArithmeticError(f"Class number formula is not integral for D={disc.D}")
    return numerator // (2 * disc.N)
