"""
Positive definite binary quadratic forms.

Forms [a, b, c] stand for a x^2 + b x y + c y^2. Reduction follows the
classical convention |b| <= a <= c with b >= 0 when |b| = a or a = c, so
every SL2(Z) class has exactly one reduced representative.
"""

import logging
from dataclasses import dataclass
from math import gcd, isqrt
from typing import List, Optional, Tuple

import mpmath as mp

from thetalift.arith import DiscriminantLike, ModularMatrix, as_discriminant, igcdex
from thetalift.config import DEFAULT_PRECISION, PrecisionContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadForm:
    """A positive definite binary quadratic form [a, b, c]."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"Form {self} is not positive definite (a <= 0)")
        if self.disc >= 0:
            raise ValueError(f"Form {self} has non-negative discriminant {self.disc}")

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if b < 0 and (abs(b) == a or a == c):
            return False
        return True

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def conjugate(self) -> "QuadForm":
        """The form [a, -b, c] of the inverse class."""
        return QuadForm(self.a, -self.b, self.c)

    def transform(self, g: ModularMatrix) -> "QuadForm":
        """The form (x, y) -> f(g_a x + g_b y, g_c x + g_d y)."""
        p, q, r, s = g.as_tuple()
        a = self(p, r)
        b = 2 * self.a * p * q + self.b * (p * s + q * r) + 2 * self.c * r * s
        c = self(q, s)
        return QuadForm(a, b, c)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


def principal_form(D: DiscriminantLike) -> QuadForm:
    """
    The identity form [1, 1, (1 - D)/4].

    Example:
        >>> principal_form(-23)
        QuadForm(a=1, b=1, c=6)
    """
    disc = as_discriminant(D)
    return QuadForm(1, 1, (1 - disc.D) // 4)


# =============================================================================
# REDUCTION
# =============================================================================

def _normalize(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Translate so that -a < b <= a."""
    r = (a - b) // (2 * a)
    return a, b + 2 * r * a, a * r * r + b * r + c


def reduce_form(f: QuadForm) -> QuadForm:
    """
    Reduced representative of the SL2(Z) class of f.

    Example:
        >>> reduce_form(QuadForm(2, 3, 4))
        QuadForm(a=2, b=-1, c=3)
        >>> reduce_form(QuadForm(6, -1, 1))
        QuadForm(a=1, b=1, c=6)
    """
    a, b, c = _normalize(f.a, f.b, f.c)
    while a > c or (a == c and b < 0):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
    a, b, c = _normalize(a, b, c)
    return QuadForm(a, b, c)


reduce = reduce_form


def enumerate_reduced(D: DiscriminantLike) -> List[QuadForm]:
    """
    All reduced primitive forms of discriminant D.

    Sorted by (a, |b|, sign), so the principal form comes first.

    Example:
        >>> [str(f) for f in enumerate_reduced(-23)]
        ['[1,1,6]', '[2,1,3]', '[2,-1,3]']
    """
    disc = as_discriminant(D)
    N = disc.N
    forms = []
    a_max = isqrt(N // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc.D) % 2 != 0:
                continue
            numerator = b * b - disc.D
            if numerator % (4 * a) != 0:
                continue
            c = numerator // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            f = QuadForm(a, b, c)
            if f.is_primitive():
                forms.append(f)
    forms.sort(key=lambda f: (f.a, abs(f.b), f.b < 0))
    logger.debug(f"D={disc.D}: {len(forms)} reduced forms")
    return forms


# =============================================================================
# COMPOSITION
# =============================================================================

def solve_linmod(a: int, b: int, m: int) -> Tuple[int, int]:
    """
    Solve a x = b (mod m).

    Returns:
        (x0, step) such that the solutions are x0 + step * k
    """
    x, _, g = igcdex(a, m)
    x, g = int(x), int(g)
    if b % g != 0:
        raise ArithmeticError(f"{a} x = {b} mod {m} has no solution")
    step = m // g
    return (b // g) * x % step, step


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """
    Gauss composition of two forms of the same discriminant, reduced.

    Example:
        >>> compose(QuadForm(2, 1, 3), QuadForm(2, -1, 3))
        QuadForm(a=1, b=1, c=6)
    """
    if f.disc != g.disc:
        raise ValueError(f"Cannot compose {f} and {g}: discriminants differ")
    a1, b1, c1 = f.as_tuple()
    a2, b2, _ = g.as_tuple()

    s_half = (b1 + b2) // 2
    h_half = (b2 - b1) // 2
    w = gcd(gcd(a1, a2), s_half)
    s, t, u = a1 // w, a2 // w, s_half // w

    k_temp, constant_factor = solve_linmod(t * u, h_half * u + s * c1, s * t)
    n, _ = solve_linmod(t * constant_factor, h_half - t * k_temp, s)
    k = k_temp + constant_factor * n
    l_ = (t * k - h_half) // s
    m = (t * u * k - h_half * u - s * c1) // (s * t)

    a3 = s * t
    b3 = w * u - (k * t + l_ * s)
    c3 = k * l_ - w * m
    return reduce_form(QuadForm(a3, b3, c3))


# =============================================================================
# CM POINTS
# =============================================================================

@dataclass(frozen=True)
class CMPoint:
    """The root tau = (-b + i sqrt|D|)/(2a) of a tau^2 + b tau + c in the upper half plane."""

    tau: mp.mpc
    u: mp.mpf
    v: mp.mpf
    form: QuadForm


def cm_point(f: QuadForm, ctx: Optional[PrecisionContext] = None) -> CMPoint:
    """
    CM point of a form at the working precision of ctx.

    Example:
        >>> p = cm_point(QuadForm(1, 1, 2))
        >>> float(p.u)
        -0.5
    """
    ctx = ctx or DEFAULT_PRECISION
    with ctx.workprec():
        u = mp.mpf(-f.b) / (2 * f.a)
        v = mp.sqrt(-f.disc) / (2 * f.a)
        return CMPoint(tau=mp.mpc(u, v), u=u, v=v, form=f)
