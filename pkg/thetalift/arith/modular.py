"""
Modular group combinatorics.

Integral matrices of determinant one, their factorization into the
generators S and T, right coset representatives of Gamma_0(N) and
reduction of points of the upper half plane to the standard fundamental
domain.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

import mpmath as mp
import numpy as np
from sympy import factorint

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from thetalift.exceptions import ConvergenceError

logger = logging.getLogger(__name__)


# =============================================================================
# MATRICES AND WORDS
# =============================================================================

@dataclass(frozen=True)
class ModularMatrix:
    """An element [[a, b], [c, d]] of SL2(Z)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(
                f"Determinant of [[{self.a}, {self.b}], [{self.c}, {self.d}]] is not 1"
            )

    def __matmul__(self, other: "ModularMatrix") -> "ModularMatrix":
        return ModularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "ModularMatrix":
        return ModularMatrix(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "ModularMatrix":
        return ModularMatrix(-self.a, -self.b, -self.c, -self.d)

    def act(self, tau):
        """Moebius action tau -> (a tau + b) / (c tau + d)."""
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def j(self, tau):
        """Automorphy factor c tau + d."""
        return self.c * tau + self.d

    def in_gamma0(self, N: int) -> bool:
        return self.c % N == 0

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


IDENTITY = ModularMatrix(1, 0, 0, 1)
S = ModularMatrix(0, -1, 1, 0)
T = ModularMatrix(1, 1, 0, 1)


def T_power(n: int) -> ModularMatrix:
    return ModularMatrix(1, n, 0, 1)


@dataclass(frozen=True)
class STWord:
    """
    A word in the generators S and T^n.

    Tokens are ("S", 1) or ("T", n); the word denotes the left-to-right
    product of the corresponding matrices.
    """

    tokens: Tuple[Tuple[str, int], ...] = ()

    def to_matrix(self) -> ModularMatrix:
        result = IDENTITY
        for name, n in self.tokens:
            result = result @ (S if name == "S" else T_power(n))
        return result

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        if not self.tokens:
            return "1"
        return " ".join("S" if name == "S" else f"T^{n}" for name, n in self.tokens)


def _append(tokens: List[Tuple[str, int]], name: str, n: int) -> None:
    if name == "T":
        if n == 0:
            return
        if tokens and tokens[-1][0] == "T":
            merged = tokens[-1][1] + n
            tokens.pop()
            if merged:
                tokens.append(("T", merged))
            return
    tokens.append((name, n))


def st_decompose(g: ModularMatrix) -> STWord:
    """
    Factor g into a word in S and T whose product is exactly g.

    Maintains g = W * M and strips M by T^{-q} and S^{-1} until its lower
    left entry vanishes.

    Example:
        >>> str(st_decompose(S))
        'S'
    """
    tokens: List[Tuple[str, int]] = []
    a, b, c, d = g.as_tuple()
    while c != 0:
        q = a // c
        _append(tokens, "T", q)
        a, b = a - q * c, b - q * d
        # M <- S^{-1} M
        _append(tokens, "S", 1)
        a, b, c, d = c, d, -a, -b
    if a == 1:
        _append(tokens, "T", b)
    else:
        # M = -T^{-b} = S^2 T^{-b}
        _append(tokens, "S", 1)
        _append(tokens, "S", 1)
        _append(tokens, "T", -b)
    return STWord(tuple(tokens))


def random_modular_matrix(rng: np.random.Generator, length: int = 6, spread: int = 3) -> ModularMatrix:
    """Random product of S and T^n with |n| <= spread."""
    result = IDENTITY
    for _ in range(length):
        n = int(rng.integers(-spread, spread + 1))
        result = result @ T_power(n) @ S
    if rng.integers(0, 2):
        result = -result
    return result


# =============================================================================
# GAMMA_0(N) COSETS
# =============================================================================

def _is_squarefree(N: int) -> bool:
    return all(e == 1 for e in factorint(N).values())


def gamma0_index(N: int) -> int:
    """Index N * prod_{p | N} (1 + 1/p) of Gamma_0(N) in SL2(Z)."""
    index = N
    for p in factorint(N):
        index = index // p * (p + 1)
    return index


def _lift_bottom_row(c: int, d: int, N: int) -> ModularMatrix:
    """Matrix of SL2(Z) whose bottom row is congruent to (c, d) mod N."""
    if c == 0:
        # (0 : d) is the point (0 : 1)
        return IDENTITY
    k = 0
    while gcd(c, d + k * N) != 1:
        k += 1
    d_lift = d + k * N
    x, y, _ = igcdex(d_lift, c)
    # x d - (-y) c = 1
    return ModularMatrix(int(x), int(-y), c, d_lift)


def coset_reps_gamma0(N: int) -> List[ModularMatrix]:
    """
    Right coset representatives of Gamma_0(N) in SL2(Z).

    Points (c : d) of the projective line over Z/N are listed by their
    lexicographically smallest representative with c, d in [0, N), and each
    is lifted to a matrix with that bottom row.

    Example:
        >>> len(coset_reps_gamma0(23))
        24
    """
    if N < 1:
        raise ValueError(f"Level must be positive, got {N}")
    if not _is_squarefree(N):
        raise ValueError(f"Level must be squarefree, got {N}")

    units = [u for u in range(1, N + 1) if gcd(u, N) == 1]
    seen = set()
    reps: List[ModularMatrix] = []
    for c in range(N):
        for d in range(N):
            if gcd(gcd(c, d), N) != 1 or (c, d) in seen:
                continue
            for u in units:
                seen.add(((u * c) % N, (u * d) % N))
            reps.append(_lift_bottom_row(c, d, N))

    expected = gamma0_index(N)
    if len(reps) != expected:
        raise ArithmeticError(f"Found {len(reps)} cosets for N={N}, expected {expected}")
    logger.debug(f"Gamma_0({N}): {len(reps)} right cosets")
    return reps


def coset_index(g: ModularMatrix, reps: Sequence[ModularMatrix], N: int) -> int:
    """Index of the representative r with g r^{-1} in Gamma_0(N)."""
    for i, r in enumerate(reps):
        if (g @ r.inverse()).in_gamma0(N):
            return i
    raise ValueError(f"No coset representative found for {g.as_tuple()}")


# =============================================================================
# FUNDAMENTAL DOMAIN
# =============================================================================

def reduce_to_fundamental_domain(
    tau, max_iterations: int = 1000, tolerance: float = 1e-12
) -> Tuple[mp.mpc, ModularMatrix]:
    """
    Move tau into |tau| >= 1, |Re tau| <= 1/2.

    Returns:
        Tuple (tau', gamma) with tau' = gamma tau

    Example:
        >>> tau, gamma = reduce_to_fundamental_domain(5 + 1j)
        >>> gamma.as_tuple()
        (1, -5, 0, 1)
    """
    z = mp.mpc(tau)
    if z.imag <= 0:
        raise ValueError(f"tau must lie in the upper half plane, got {tau}")

    gamma = IDENTITY
    for _ in range(max_iterations):
        n = int(mp.nint(z.real))
        if n:
            z -= n
            gamma = T_power(-n) @ gamma
        if abs(z) < 1 - tolerance:
            z = -1 / z
            gamma = S @ gamma
        else:
            return z, gamma
    raise ConvergenceError(f"Fundamental domain reduction did not converge for tau={tau}")


def in_fundamental_domain(tau, tolerance: float = 1e-12) -> bool:
    z = mp.mpc(tau)
    return abs(z) >= 1 - tolerance and abs(z.real) <= mp.mpf(1) / 2 + tolerance
