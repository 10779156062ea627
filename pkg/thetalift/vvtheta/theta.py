"""
Vector-valued theta functions Theta_P(tau, h).

P is the lattice of class a with Q(x) = N(x)/A. For h in Cl_k with an
integral representative b prime to D the lattice h P = b^2 a / N(b) has class
[h]^2 [a] and the same completions at the primes of D, so

    Theta_P(tau, h) = sum_r sum_{lambda in d^-1 hP, label(lambda) = r} e(Q(lambda) tau) e_r

with labels r in Z/N taken in the discriminant form of P. Component 0 is
theta_{a h^2}.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from thetalift.classgroup import (
    ClassCharacter,
    ClassGroup,
    QuadForm,
    class_group,
    coprime_representative,
)
from thetalift.exceptions import CosetTransportError
from thetalift.ideallat import (
    CosetLabeling,
    coset_transport,
    dual_ideal,
    enumerate_by_norm,
    ideal_from_form,
    transported_ideal,
)
from thetalift.scalartheta import Coefficient
from thetalift.weilrep import (
    DiscriminantForm,
    VectorValuedForm,
    build_discform,
    from_component_coefficients,
    symmetrize,
)

logger = logging.getLogger(__name__)

# Enumerated vectors whose labels are re-derived through explicit coset membership
LABEL_CHECKS = 12


@dataclass
class VVTheta:
    """
    Theta_P(tau, h) with the data it was built from.

    Attributes:
        a_class: Class of the lattice P
        h_class: Acting class
        lattice_form: Representative of a with leading coefficient A prime to D
        acting_form: Representative of h with leading coefficient prime to D
        form: The vector-valued expansion, exact integer coefficients
    """

    a_class: int
    h_class: int
    lattice_form: QuadForm
    acting_form: QuadForm
    form: VectorValuedForm

    @property
    def df(self) -> DiscriminantForm:
        return self.form.df

    @property
    def A(self) -> int:
        return self.lattice_form.a

    def component(self, r: int):
        return self.form.component(r)


def lattice_discform(G: ClassGroup, a_class: int) -> Tuple[QuadForm, DiscriminantForm]:
    """Coprime representative of a and the discriminant form of its lattice."""
    form = coprime_representative(G, a_class, G.disc.N)
    return form, build_discform(G.D, form.a)


def _check_labels(
    labeling: CosetLabeling, a_src, a_dst, vectors, multiplier: Optional[int] = None
) -> None:
    """Re-derive labels of the first vectors through explicit coset membership."""
    specs = {}
    for lam in vectors[:LABEL_CHECKS]:
        r = labeling.label(lam)
        if r not in specs:
            specs[r] = coset_transport(a_src, a_dst, labeling.representative(r), multiplier)
        if not specs[r].contains(lam):
            raise CosetTransportError(f"Vector {lam} labeled {r} is outside the transported coset")


@lru_cache(maxsize=512)
def _theta_counts(D: int, a_class: int, h_class: int, n_max: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    G = class_group(D)
    N = G.disc.N
    lattice_form, df = lattice_discform(G, a_class)
    acting_form = coprime_representative(G, h_class, N)

    a_src = ideal_from_form(lattice_form)
    a_dst = transported_ideal(a_src, ideal_from_form(acting_form))
    labeling = CosetLabeling(D=D, A=df.A)

    vectors = enumerate_by_norm(dual_ideal(a_dst), None, n_max)
    _check_labels(labeling, a_src, a_dst, vectors)

    counts: List[Dict[int, int]] = [dict() for _ in range(N)]
    for lam in vectors:
        q = a_dst.Q(lam) * N
        if q.denominator != 1:
            raise CosetTransportError(f"N Q({lam}) = {q} is not an integer")
        r = labeling.label(lam)
        n = int(q)
        counts[r][n] = counts[r].get(n, 0) + 1
    logger.debug(
        f"Theta_P(a={a_class}, h={h_class}) for D={D}: {len(vectors)} vectors, n_max={n_max}"
    )
    return tuple(tuple(sorted(c.items())) for c in counts)


def vv_theta(G: ClassGroup, a_class: int, h_class: int, n_max: int) -> VVTheta:
    """
    Theta_P(tau, h) with exponents Q(lambda) <= n_max.

    Components carry numerators n <= n_max * N of exponents n/N.

    Raises:
        CosetTransportError: If the transported cosets fail their consistency checks

    Example:
        >>> G = class_group(-23)
        >>> th = vv_theta(G, 0, 1, 5)
        >>> th.component(0).coefficient(0)
        1
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    lattice_form, df = lattice_discform(G, a_class)
    acting_form = coprime_representative(G, h_class, G.disc.N)
    counts = _theta_counts(G.D, a_class, h_class, n_max)
    form = from_component_coefficients(
        df,
        [dict(c) for c in counts],
        prec=n_max * df.N,
        meta={"kind": "vv_theta", "a": a_class, "h": h_class},
    )
    return VVTheta(
        a_class=a_class,
        h_class=h_class,
        lattice_form=lattice_form,
        acting_form=acting_form,
        form=form,
    )


def _character_sum(
    G: ClassGroup, a_class: int, weights: Dict[int, Coefficient], n_max: int, sym: bool
) -> VectorValuedForm:
    total: Optional[VectorValuedForm] = None
    for h_class, weight in weights.items():
        term = vv_theta(G, a_class, h_class, n_max).form
        if sym:
            term = symmetrize(term)
        term = term.scale(weight)
        total = term if total is None else total + term
    return total


def vv_theta_psi(G: ClassGroup, a_class: int, psi: ClassCharacter, n_max: int) -> VectorValuedForm:
    """
    Theta_P(tau, psi) = sum_h psi(h) Theta_P(tau, h).

    Trivial psi gives the Eisenstein series E_P; otherwise a cusp form.
    """
    F = _character_sum(G, a_class, {h: psi(h) for h in range(G.h)}, n_max, sym=False)
    F.meta = {"kind": "vv_theta_psi", "a": a_class, "character": psi.index}
    return F


def eisenstein_vv(G: ClassGroup, a_class: int, n_max: int) -> VectorValuedForm:
    """E_P = sum_h Theta_P(tau, h)."""
    F = _character_sum(G, a_class, {h: 1 for h in range(G.h)}, n_max, sym=False)
    F.meta = {"kind": "eisenstein_vv", "a": a_class}
    return F


def vv_theta_sym(G: ClassGroup, a_class: int, h_class: int, n_max: int) -> VectorValuedForm:
    """Theta^sym_P(tau, h), the symmetrization of Theta_P(tau, h)."""
    F = symmetrize(vv_theta(G, a_class, h_class, n_max).form)
    F.meta = {"kind": "vv_theta_sym", "a": a_class, "h": h_class}
    return F


def vv_theta_sym_psi(
    G: ClassGroup, a_class: int, psi: ClassCharacter, n_max: int
) -> VectorValuedForm:
    """Theta^sym_P(tau, psi) = sum_h psi(h) Theta^sym_P(tau, h)."""
    F = _character_sum(G, a_class, {h: psi(h) for h in range(G.h)}, n_max, sym=True)
    F.meta = {"kind": "vv_theta_sym_psi", "a": a_class, "character": psi.index}
    return F
