"""
Vector-valued modular forms for the Weil representation of a discriminant form.

Component r is a q-expansion in e(n tau / N). Forms built from theta
functions satisfy the support rule n = N Q(r) mod N exactly.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import mpmath as mp

from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.scalartheta import Coefficient, QExpansion, coeff_is_zero
from thetalift.weilrep.discform import DiscriminantForm, orthogonal_group

logger = logging.getLogger(__name__)


@dataclass
class VectorValuedForm:
    """
    F = sum_r F_r(tau) e_r.

    Attributes:
        df: Discriminant form indexing the components
        components: F_r for r = 0..N-1, each with exponent denominator N
        weight: Weight of the form
        meta: Free-form annotations
    """

    df: DiscriminantForm
    components: List[QExpansion]
    weight: Fraction = Fraction(1)
    meta: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.components) != self.df.N:
            raise ValueError(
                f"Expected {self.df.N} components, got {len(self.components)}"
            )
        for r, comp in enumerate(self.components):
            if comp.N != self.df.N:
                raise ValueError(f"Component {r} has denominator {comp.N}, expected {self.df.N}")

    @classmethod
    def zero(cls, df: DiscriminantForm, prec: int, **kwargs) -> "VectorValuedForm":
        return cls(df=df, components=[QExpansion.zero(N=df.N, prec=prec) for _ in df.elements], **kwargs)

    @property
    def N(self) -> int:
        return self.df.N

    @property
    def prec(self) -> int:
        """Largest numerator known in every component."""
        return min(c.prec for c in self.components)

    def component(self, r: int) -> QExpansion:
        return self.components[r % self.N]

    def coefficient(self, r: int, n: int) -> Coefficient:
        return self.component(r).coefficient(n)

    def constant_terms(self) -> List[Coefficient]:
        return [c.constant_term for c in self.components]

    def is_cuspidal(self, tol: float = 0.0) -> bool:
        return all(coeff_is_zero(c, tol) for c in self.constant_terms())

    # -------------------------------------------------------------------------
    # Invariants
    # -------------------------------------------------------------------------

    def support_violations(self, tol: float = 0.0) -> List[tuple]:
        """(r, n) with a non-zero coefficient off n = N Q(r) mod N."""
        bad = []
        for r, comp in enumerate(self.components):
            for n, c in comp.coeffs.items():
                if not self.df.supports(r, n) and not coeff_is_zero(c, tol):
                    bad.append((r, n))
        return bad

    def check_support(self, tol: float = 0.0) -> bool:
        return not self.support_violations(tol)

    def is_symmetric(self, tol: float = 0.0) -> bool:
        """F_{u r} = F_r for every u in O(P'/P)."""
        for u in orthogonal_group(self.df):
            for r in self.df.elements:
                if not self.component(u * r).equals(self.component(r), tol=tol):
                    return False
        return True

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _check_compatible(self, other: "VectorValuedForm") -> None:
        if self.df != other.df:
            raise ValueError(f"Forms for {self.df} and {other.df} cannot be combined")

    def __add__(self, other: "VectorValuedForm") -> "VectorValuedForm":
        self._check_compatible(other)
        return VectorValuedForm(
            df=self.df,
            components=[x + y for x, y in zip(self.components, other.components)],
            weight=self.weight,
        )

    def scale(self, factor: Coefficient) -> "VectorValuedForm":
        return VectorValuedForm(
            df=self.df,
            components=[c.scale(factor) for c in self.components],
            weight=self.weight,
            meta=dict(self.meta),
        )

    def __mul__(self, factor: Coefficient) -> "VectorValuedForm":
        return self.scale(factor)

    __rmul__ = __mul__

    def __neg__(self) -> "VectorValuedForm":
        return self.scale(-1)

    def __sub__(self, other: "VectorValuedForm") -> "VectorValuedForm":
        return self + (-other)

    def conjugate(self) -> "VectorValuedForm":
        return VectorValuedForm(
            df=self.df,
            components=[c.conjugate() for c in self.components],
            weight=self.weight,
            meta=dict(self.meta),
        )

    def permuted(self, u: int) -> "VectorValuedForm":
        """F^sigma with (F^sigma)_r = F_{u r}."""
        return VectorValuedForm(
            df=self.df,
            components=[self.component(u * r) for r in self.df.elements],
            weight=self.weight,
            meta=dict(self.meta),
        )

    def truncate(self, prec: int) -> "VectorValuedForm":
        return VectorValuedForm(
            df=self.df,
            components=[c.truncate(prec) for c in self.components],
            weight=self.weight,
            meta=dict(self.meta),
        )

    def equals(self, other: "VectorValuedForm", tol: float = 0.0) -> bool:
        self._check_compatible(other)
        top = min(self.prec, other.prec)
        return all(
            x.truncate(top).equals(y.truncate(top), tol=tol)
            for x, y in zip(self.components, other.components)
        )

    # -------------------------------------------------------------------------
    # Evaluation
    # -------------------------------------------------------------------------

    def evaluate(
        self, tau, ctx: Optional[PrecisionContext] = None, tolerance: Optional[float] = None
    ) -> List[mp.mpc]:
        ctx = ctx or DEFAULT_PRECISION
        return [c.evaluate(tau, ctx, tolerance) for c in self.components]

    def coefficient_rows(self, n_top: Optional[int] = None) -> List[Coefficient]:
        """All coefficients (r, n) for n <= n_top flattened in r-major order."""
        n_top = self.prec if n_top is None else n_top
        row: List[Coefficient] = []
        for comp in self.components:
            row.extend(comp.coefficient(n) for n in range(n_top + 1))
        return row


def symmetrize(F: VectorValuedForm) -> VectorValuedForm:
    """
    F^sym = sum_{sigma in O(P'/P)} F^sigma.

    Example:
        >>> df = build_discform(-23, 1)
        >>> F = VectorValuedForm.zero(df, 10)
        >>> symmetrize(F).is_symmetric()
        True
    """
    group = orthogonal_group(F.df)
    total = F.permuted(group[0])
    for u in group[1:]:
        total = total + F.permuted(u)
    total.meta = dict(F.meta, symmetrized=True)
    logger.debug(f"Symmetrized over {len(group)} automorphisms of P'/P (N={F.N})")
    return total


def from_component_coefficients(
    df: DiscriminantForm, coeffs: Sequence[Dict[int, Coefficient]], prec: int, **kwargs
) -> VectorValuedForm:
    """Build a form from per-component coefficient maps."""
    return VectorValuedForm(
        df=df,
        components=[QExpansion(N=df.N, coeffs=dict(c), prec=prec) for c in coeffs],
        **kwargs,
    )
