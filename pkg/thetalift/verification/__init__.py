"""
Verification checks for one discriminant.

Each check compares two independent computations and reports both values.
Checks run in registry order, cheapest first.

Submodules:
    - base: CheckContext, CheckResult, the check base class and registry
    - structure: Class numbers, exactness of vv thetas, cuspidality, dimension
    - numerical: Weil representation relations and eta consistency
    - lift: The lift against symmetrized vv thetas and component 0
    - petersson: Orthogonality, closed forms, adjointness, scalar norms
"""

from thetalift.verification.base import (
    CHECK_REGISTRY,
    CheckContext,
    CheckResult,
    VerificationCheck,
    get_available_checks,
    get_check,
    register_check,
)
from thetalift.verification.lift import LiftComponentZeroCheck, LiftSymmetrizedCheck
from thetalift.verification.numerical import EtaConsistencyCheck, WeilRelationsCheck
from thetalift.verification.petersson import (
    AdjointnessCheck,
    ClosedFormAgreementCheck,
    OrthogonalityCheck,
    PhiDoubleSumCheck,
    ScalarNormChainCheck,
)
from thetalift.verification.structure import (
    ClassNumberCheck,
    CuspidalityCheck,
    DimensionCheck,
    ExactnessSpineCheck,
)

# Auto-register checks
register_check(ClassNumberCheck())
register_check(ExactnessSpineCheck())
register_check(CuspidalityCheck())
register_check(DimensionCheck())
register_check(WeilRelationsCheck())
register_check(EtaConsistencyCheck())
register_check(LiftSymmetrizedCheck())
register_check(LiftComponentZeroCheck())
register_check(PhiDoubleSumCheck())
register_check(OrthogonalityCheck())
register_check(ClosedFormAgreementCheck())
register_check(AdjointnessCheck())
register_check(ScalarNormChainCheck())

__all__ = [
    # Base
    "CHECK_REGISTRY",
    "CheckContext",
    "CheckResult",
    "VerificationCheck",
    "get_available_checks",
    "get_check",
    "register_check",
    # Checks
    "AdjointnessCheck",
    "ClassNumberCheck",
    "ClosedFormAgreementCheck",
    "CuspidalityCheck",
    "DimensionCheck",
    "EtaConsistencyCheck",
    "ExactnessSpineCheck",
    "LiftComponentZeroCheck",
    "LiftSymmetrizedCheck",
    "OrthogonalityCheck",
    "PhiDoubleSumCheck",
    "ScalarNormChainCheck",
    "WeilRelationsCheck",
]
