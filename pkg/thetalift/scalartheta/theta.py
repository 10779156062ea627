"""
Scalar theta series of ideal classes.

theta_a(tau) = sum_{x in a} e(N(x)/N(a) tau) = 1 + sum_{n >= 1} rho(n, a) q^n
is a weight one form on Gamma_0(|D|) with character chi_D. Coefficients are
counted exactly by lattice enumeration; character combinations carry exact
cyclotomic coefficients.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from thetalift.classgroup import (
    ClassCharacter,
    ClassGroup,
    CyclotomicNumber,
    QuadForm,
    characters,
)
from thetalift.ideallat import ideal_from_form, representation_counts
from thetalift.scalartheta.qexpansion import Coefficient, QExpansion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepNumbers:
    """
    Representation numbers rho(n, a) = #{(x, y) : f(x, y) = n}.

    Attributes:
        form: Reduced form of the class
        counts: counts[n] for 0 <= n <= n_max
    """

    form: QuadForm
    counts: Tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __call__(self, n: int) -> int:
        if n < 0 or n > self.n_max:
            raise ValueError(f"n={n} outside 0..{self.n_max}")
        return self.counts[n]


@lru_cache(maxsize=256)
def _counts(form: QuadForm, n_max: int) -> Tuple[int, ...]:
    return tuple(representation_counts(ideal_from_form(form), n_max))


def rep_numbers(G: ClassGroup, cls: int, n_max: int) -> RepNumbers:
    """Representation numbers of the reduced form of class cls."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    form = G.form(cls)
    return RepNumbers(form=form, counts=_counts(form, n_max))


# =============================================================================
# THETA SERIES
# =============================================================================

def theta_ideal(G: ClassGroup, cls: int, n_max: int) -> QExpansion:
    """
    theta_a for the class with index cls, coefficients up to q^n_max.

    Example:
        >>> G = class_group(-7)
        >>> theta_ideal(G, 0, 4).coefficient_list()
        [1, 2, 4, 0, 6]
    """
    rho = rep_numbers(G, cls, n_max)
    return QExpansion(
        N=1,
        coeffs=dict(enumerate(rho.counts)),
        prec=n_max,
        disc=G.D,
        meta={"kind": "theta", "class": cls, "form": str(rho.form)},
        theta_decomposition={cls: 1},
    )


def _combination(
    G: ClassGroup, weights: Dict[int, Coefficient], n_max: int, meta: Dict
) -> QExpansion:
    """sum_c weights[c] theta_c as an exact expansion."""
    coeffs: Dict[int, Coefficient] = {}
    for cls, weight in weights.items():
        for n, count in enumerate(rep_numbers(G, cls, n_max).counts):
            if count:
                coeffs[n] = coeffs.get(n, 0) + weight * count
    decomposition = {c: w for c, w in weights.items() if w != 0}
    return QExpansion(
        N=1,
        coeffs=coeffs,
        prec=n_max,
        disc=G.D,
        meta=meta,
        theta_decomposition=decomposition,
    )


def theta_psi(psi: ClassCharacter, n_max: int) -> QExpansion:
    """
    theta_psi = (1/w_k) sum_a psi(a) theta_a.

    The constant term is h/w_k for trivial psi and 0 otherwise.
    """
    G = psi.group
    w = G.disc.w_k
    weights = {cls: psi(cls) / w for cls in range(G.h)}
    logger.debug(f"theta_psi for {psi!r} on Cl({G.D}), n_max={n_max}")
    return _combination(G, weights, n_max, {"kind": "theta_psi", "character": psi.index})


def genus_theta_sum(G: ClassGroup, a_class: int, psi: ClassCharacter, n_max: int) -> QExpansion:
    """
    sum_h psi(h) theta_{a h^2}.

    Equals w_k sum_{chi^2 = psi} conj(chi)(a) theta_chi.
    """
    weights: Dict[int, Coefficient] = {}
    for h_class in range(G.h):
        target = G.class_action(h_class, a_class)
        weights[target] = weights.get(target, 0) + psi(h_class)
    return _combination(
        G, weights, n_max, {"kind": "genus_theta_sum", "class": a_class, "character": psi.index}
    )


def genus_eisenstein(G: ClassGroup, a_class: int, n_max: int) -> QExpansion:
    """
    E_A = (1/h) sum_b theta_{a b^2}, the average over the genus of a.

    Example:
        >>> E = genus_eisenstein(class_group(-23), 0, 3)
        >>> E.constant_term
        Fraction(1, 1)
    """
    weights: Dict[int, Coefficient] = {}
    for b in range(G.h):
        target = G.class_action(b, a_class)
        weights[target] = weights.get(target, 0) + Fraction(1, G.h)
    return _combination(G, weights, n_max, {"kind": "genus_eisenstein", "class": a_class})


def cusp_part(G: ClassGroup, a_class: int, h_class: int, n_max: int) -> QExpansion:
    """g_{a h^2} = theta_{a h^2} - E_A, a cusp form."""
    target = G.class_action(h_class, a_class)
    g = theta_ideal(G, target, n_max) - genus_eisenstein(G, a_class, n_max)
    g.meta = {"kind": "cusp_part", "class": a_class, "h": h_class}
    return g


def theta_from_characters(G: ClassGroup, cls: int, n_max: int) -> QExpansion:
    """theta_a rebuilt as (w_k/h) sum_chi conj(chi)(a) theta_chi."""
    total = QExpansion.zero(N=1, prec=n_max, disc=G.D)
    total.theta_decomposition = {}
    factor = Fraction(G.disc.w_k, G.h)
    for chi in characters(G):
        weight: CyclotomicNumber = chi.conjugate()(cls) * factor
        total = total + theta_psi(chi, n_max).scale(weight)
    total.meta = {"kind": "theta", "class": cls, "route": "characters"}
    return total
