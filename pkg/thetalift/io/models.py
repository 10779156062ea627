"""
Pydantic models of the JSON documents written by the CLI.

Numbers are decimal strings at the run precision; integers stay integers.
A coefficient is one of:

    7                        an integer
    "3/2"                    a rational
    ["0.5", "-0.866"]        a complex number (real, imaginary)
    {"m": 3, "terms": {...}} an element of Q(zeta_m), exponent -> rational
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field


class CyclotomicModel(BaseModel):
    """sum_k terms[k] zeta_m^k."""

    m: int = Field(..., ge=1, description="Order of the root of unity zeta_m")
    terms: Dict[int, str] = Field(..., description="Exponent -> rational coefficient")


CoefficientValue = Union[int, str, List[str], CyclotomicModel]


class QExpansionModel(BaseModel):
    """
    A truncated expansion sum_n c_n e(n tau / N).
    """

    N: int = Field(..., ge=1, description="Exponent denominator")
    prec: int = Field(..., ge=0, description="All coefficients with n <= prec are known")
    weight: str = Field(default="1", description="Weight as a rational string")
    disc: Optional[int] = Field(default=None, description="Discriminant D")
    meta: Dict[str, Any] = Field(default_factory=dict, description="Annotations")
    coefficients: Dict[int, CoefficientValue] = Field(
        ..., description="Non-zero coefficients by exponent numerator n"
    )
    theta_decomposition: Optional[Dict[int, CoefficientValue]] = Field(
        default=None, description="Coefficients on theta_c by class index c"
    )

    model_config = {
        "json_schema_extra": {
            "example": {
                "N": 1,
                "prec": 4,
                "weight": "1",
                "disc": -7,
                "meta": {"kind": "theta_ideal", "class": 0},
                "coefficients": {"0": 1, "1": 2, "2": 4, "4": 6},
                "theta_decomposition": {"0": 1},
            }
        }
    }


class VectorValuedFormModel(BaseModel):
    """
    A vector-valued form sum_r F_r e_r for the discriminant form (Z/|D|, A r^2/|D|).
    """

    disc: int = Field(..., description="Discriminant D")
    A: int = Field(..., ge=1, description="Norm scale of the lattice, prime to D")
    N: int = Field(..., ge=1, description="Level |D| and exponent denominator")
    prec: int = Field(..., ge=0, description="Numerator bound of every component")
    weight: str = Field(default="1", description="Weight as a rational string")
    meta: Dict[str, Any] = Field(default_factory=dict, description="Annotations")
    components: List[Dict[int, CoefficientValue]] = Field(
        ..., description="Coefficients of F_r by numerator n, for r = 0..N-1"
    )

    model_config = {
        "json_schema_extra": {
            "example": {
                "disc": -7,
                "A": 1,
                "N": 7,
                "prec": 7,
                "weight": "1",
                "meta": {"kind": "vv_theta", "a": 0, "h": 0},
                "components": [
                    {"0": 1, "7": 2}, {"1": 1}, {"4": 1}, {"2": 1}, {"2": 1}, {"4": 1}, {"1": 1}
                ],
            }
        }
    }


class PeterssonValueModel(BaseModel):
    """A Petersson product with its error estimate."""

    pair: Optional[List[int]] = Field(default=None, description="Character indices (psi, chi)")
    method: str = Field(..., description="quadrature, gamma0_quadrature or closed_form")
    value: List[str] = Field(..., description="[real, imaginary] as decimal strings")
    error: str = Field(..., description="Estimated absolute error")
    meta: Dict[str, Any] = Field(default_factory=dict, description="Annotations")

    model_config = {
        "json_schema_extra": {
            "example": {
                "pair": [1, 2],
                "method": "closed_form",
                "value": ["0.53017", "0.0"],
                "error": "1.2e-36",
                "meta": {"a_class": 0, "case": "conjugate"},
            }
        }
    }


class PairingComparisonModel(BaseModel):
    """Both evaluations of one Petersson product."""

    closed_form: PeterssonValueModel = Field(..., description="Closed-form value")
    quadrature: PeterssonValueModel = Field(..., description="Quadrature value")
    agree: bool = Field(..., description="Agreement within the closed-form tolerance")


class CharacterModel(BaseModel):
    index: int = Field(..., description="Position in the canonical character list")
    exponents: List[int] = Field(..., description="Exponents on the generators")
    order: int = Field(..., ge=1, description="Order of the character")
    real: bool = Field(..., description="Whether psi = conj(psi)")


class ClassGroupModel(BaseModel):
    """Reduced forms, structure, characters and CM points of Cl(D)."""

    disc: int = Field(..., description="Discriminant D")
    h: int = Field(..., ge=1, description="Class number")
    structure: List[int] = Field(..., description="Invariant factors")
    generators: List[int] = Field(..., description="Class indices of the generators")
    forms: List[List[int]] = Field(..., description="Reduced forms [a, b, c], principal first")
    cm_points: List[List[str]] = Field(..., description="CM point of each form as [u, v]")
    characters: List[CharacterModel] = Field(..., description="Characters in canonical order")
    genus_count: int = Field(..., ge=1, description="Number of genera 2^(t-1)")

    model_config = {
        "json_schema_extra": {
            "example": {
                "disc": -23,
                "h": 3,
                "structure": [3],
                "generators": [1],
                "forms": [[1, 1, 6], [2, 1, 3], [2, -1, 3]],
                "cm_points": [["-0.5", "2.3979"], ["-0.25", "1.1990"], ["0.25", "1.1990"]],
                "characters": [{"index": 0, "exponents": [0], "order": 1, "real": True}],
                "genus_count": 1,
            }
        }
    }


class ThetaSpaceModel(BaseModel):
    """Rank data of Theta(P)."""

    disc: int = Field(..., description="Discriminant D")
    a_class: int = Field(..., description="Class of P")
    n_max: int = Field(..., description="Truncation of the scalar exponent")
    rank: int = Field(..., description="Rank of the spanning set")
    rank_half: int = Field(..., description="Rank at n_max // 2")
    dimension_formula: str = Field(..., description="(h + 2^(t-1)) / 2")
    sym_rank: int = Field(..., description="Rank of the symmetric thetas")
    genus_rank: int = Field(..., description="Rank of the scalar genus thetas")
    basis_characters: List[int] = Field(..., description="Characters of the basis")
    sym_basis_characters: List[int] = Field(..., description="Characters of the symmetric basis")


class CheckResultModel(BaseModel):
    """One verification check."""

    name: str = Field(..., description="Registered check name")
    status: str = Field(..., description="passed, failed, skipped or error")
    message: str = Field(default="", description="Summary or error text")
    values: Dict[str, Any] = Field(default_factory=dict, description="Compared values")
    tolerance: Optional[str] = Field(default=None, description="Tolerance applied")
    duration: float = Field(default=0.0, ge=0, description="Seconds spent")


class VerificationReportModel(BaseModel):
    """All checks run for one discriminant."""

    disc: int = Field(..., description="Discriminant D")
    status: str = Field(..., description="Overall run status")
    passed: bool = Field(..., description="True iff no check failed or errored")
    checks: List[CheckResultModel] = Field(..., description="Results in run order")
    config: Dict[str, Any] = Field(default_factory=dict, description="Run configuration")
    started_at: Optional[str] = Field(default=None, description="ISO timestamp")
    completed_at: Optional[str] = Field(default=None, description="ISO timestamp")

    model_config = {
        "json_schema_extra": {
            "example": {
                "disc": -23,
                "status": "completed",
                "passed": True,
                "checks": [
                    {
                        "name": "class_number",
                        "status": "passed",
                        "message": "h = 3",
                        "values": {"enumerated": 3, "oracle": 3},
                        "tolerance": None,
                        "duration": 0.01,
                    }
                ],
                "config": {"prec_bits": 128},
                "started_at": "2026-01-15T10:30:00",
                "completed_at": "2026-01-15T10:31:10",
            }
        }
    }
