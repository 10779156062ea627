"""
JSON export of expansions, Petersson values, class groups and reports.

Follows the strategy pattern: an Exporter turns a model into text and
writes it to a file or stdout; converters map domain objects to models and
readers map models back.
"""

import json
import logging
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from pathlib import Path
from typing import Dict, List, Optional, Union

import mpmath as mp
from pydantic import BaseModel

from thetalift.classgroup import ClassGroup, CyclotomicNumber, characters, cm_point, genus_data
from thetalift.config import DEFAULT_PRECISION, PrecisionContext
from thetalift.io.models import (
    CharacterModel,
    ClassGroupModel,
    CoefficientValue,
    CyclotomicModel,
    PeterssonValueModel,
    QExpansionModel,
    ThetaSpaceModel,
    VectorValuedFormModel,
)
from thetalift.petersson import PeterssonValue
from thetalift.scalartheta import Coefficient, QExpansion
from thetalift.vvtheta import ThetaSpace
from thetalift.weilrep import VectorValuedForm, build_discform

logger = logging.getLogger(__name__)


# =============================================================================
# EXPORT CONFIGURATION
# =============================================================================

@dataclass
class ExportConfig:
    """
    Configuration for export operations.

    Attributes:
        pretty: Indent the JSON
        digits: Decimal digits of numerical values
        output: File to write, stdout when None
    """

    pretty: bool = False
    digits: int = 30
    output: Optional[Path] = None

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError(f"digits must be positive, got {self.digits}")
        if self.output is not None:
            self.output = Path(self.output)


# =============================================================================
# EXPORTERS
# =============================================================================

class Exporter(ABC):
    """Abstract base class for exporters."""

    @abstractmethod
    def render(self, model: BaseModel, config: ExportConfig) -> str:
        """Text of the document."""
        pass

    def export(self, model: BaseModel, config: Optional[ExportConfig] = None) -> str:
        """Render the model and write it to config.output or stdout."""
        config = config or ExportConfig()
        text = self.render(model, config)
        if config.output is None:
            sys.stdout.write(text + "\n")
        else:
            config.output.parent.mkdir(parents=True, exist_ok=True)
            config.output.write_text(text + "\n")
            logger.info(f"Wrote {type(model).__name__} to {config.output}")
        return text


class JsonExporter(Exporter):
    """JSON documents through pydantic."""

    def render(self, model: BaseModel, config: ExportConfig) -> str:
        data = model.model_dump(mode="json")
        return json.dumps(data, indent=2 if config.pretty else None, sort_keys=False)


# =============================================================================
# COEFFICIENTS
# =============================================================================

def _rational_text(x: Fraction) -> Union[int, str]:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def encode_coefficient(c: Coefficient, digits: int = 30) -> CoefficientValue:
    """
    JSON value of a coefficient.

    Example:
        >>> encode_coefficient(Fraction(3, 2))
        '3/2'
    """
    if isinstance(c, CyclotomicNumber):
        if c.is_rational():
            return _rational_text(c.rational_value())
        return CyclotomicModel(m=c.m, terms={k: str(v) for k, v in c.coeffs.items()})
    if isinstance(c, Rational):
        return _rational_text(c)
    z = mp.mpc(c)
    return [mp.nstr(z.real, digits), mp.nstr(z.imag, digits)]


def decode_coefficient(value: CoefficientValue, prec: int = 128) -> Coefficient:
    if isinstance(value, CyclotomicModel):
        return CyclotomicNumber(value.m, {k: Fraction(v) for k, v in value.terms.items()})
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return Fraction(value)
    with mp.workprec(prec):
        return mp.mpc(mp.mpf(value[0]), mp.mpf(value[1]))


def _encode_map(coeffs: Dict[int, Coefficient], digits: int) -> Dict[int, CoefficientValue]:
    return {n: encode_coefficient(c, digits) for n, c in sorted(coeffs.items())}


def _decode_map(values: Dict[int, CoefficientValue], prec: int) -> Dict[int, Coefficient]:
    return {int(n): decode_coefficient(v, prec) for n, v in values.items()}


# =============================================================================
# CONVERTERS
# =============================================================================

def qexpansion_model(f: QExpansion, digits: int = 30) -> QExpansionModel:
    return QExpansionModel(
        N=f.N,
        prec=f.prec,
        weight=str(f.weight),
        disc=f.disc,
        meta=dict(f.meta),
        coefficients=_encode_map(f.coeffs, digits),
        theta_decomposition=(
            None if f.theta_decomposition is None else _encode_map(f.theta_decomposition, digits)
        ),
    )


def vv_form_model(F: VectorValuedForm, digits: int = 30) -> VectorValuedFormModel:
    return VectorValuedFormModel(
        disc=F.df.D,
        A=F.df.A,
        N=F.N,
        prec=F.prec,
        weight=str(F.weight),
        meta=dict(F.meta),
        components=[_encode_map(comp.coeffs, digits) for comp in F.components],
    )


def petersson_model(value: PeterssonValue, digits: int = 20) -> PeterssonValueModel:
    meta = {k: v for k, v in value.meta.items() if k != "pair"}
    return PeterssonValueModel(
        pair=value.meta.get("pair"),
        method=value.method,
        value=[mp.nstr(mp.re(value.value), digits), mp.nstr(mp.im(value.value), digits)],
        error=mp.nstr(value.error_estimate, 5),
        meta=meta,
    )


def class_group_model(G: ClassGroup, ctx: Optional[PrecisionContext] = None) -> ClassGroupModel:
    ctx = ctx or DEFAULT_PRECISION
    digits = min(ctx.digits, 30)
    points = [cm_point(f, ctx) for f in G.classes]
    return ClassGroupModel(
        disc=G.D,
        h=G.h,
        structure=list(G.cyclic_orders),
        generators=list(G.generators),
        forms=[list(f.as_tuple()) for f in G.classes],
        cm_points=[[mp.nstr(p.u, digits), mp.nstr(p.v, digits)] for p in points],
        characters=[
            CharacterModel(
                index=psi.index, exponents=list(psi.exponents), order=psi.order, real=psi.is_real()
            )
            for psi in characters(G)
        ],
        genus_count=genus_data(G).genus_count,
    )


def theta_space_model(D: int, space: ThetaSpace) -> ThetaSpaceModel:
    return ThetaSpaceModel(disc=D, **space.to_dict())


# =============================================================================
# READERS
# =============================================================================

def read_qexpansion(model: QExpansionModel, prec: int = 128) -> QExpansion:
    """QExpansion from its model; exact coefficients come back exactly."""
    return QExpansion(
        N=model.N,
        coeffs=_decode_map(model.coefficients, prec),
        prec=model.prec,
        weight=Fraction(model.weight),
        disc=model.disc,
        meta=dict(model.meta),
        theta_decomposition=(
            None
            if model.theta_decomposition is None
            else _decode_map(model.theta_decomposition, prec)
        ),
    )


def read_vv_form(model: VectorValuedFormModel, prec: int = 128) -> VectorValuedForm:
    """
    VectorValuedForm from its model.

    Raises:
        ValueError: If N disagrees with the discriminant or the component count is wrong
    """
    df = build_discform(model.disc, model.A)
    if df.N != model.N:
        raise ValueError(f"N={model.N} does not match |D|={df.N}")
    components: List[QExpansion] = [
        QExpansion(N=model.N, coeffs=_decode_map(c, prec), prec=model.prec, weight=Fraction(model.weight))
        for c in model.components
    ]
    return VectorValuedForm(df=df, components=components, weight=Fraction(model.weight), meta=dict(model.meta))


def load_model(path: Union[str, Path], model_type: type) -> BaseModel:
    """Parse a JSON file into the given model type."""
    text = Path(path).read_text()
    return model_type.model_validate_json(text)
