"""
Exact checks: class numbers, the theta space and cuspidality.

No tolerances enter here; every comparison is integer or root-of-unity
equality.
"""

import logging

from thetalift.arith import class_number_oracle
from thetalift.classgroup import enumerate_reduced
from thetalift.config import TEST_DISCRIMINANTS
from thetalift.scalartheta import coeff_is_zero, theta_ideal
from thetalift.verification.base import CheckContext, CheckResult, VerificationCheck
from thetalift.vvtheta import eisenstein_vv, theta_space, vv_theta, vv_theta_psi

logger = logging.getLogger(__name__)


class ClassNumberCheck(VerificationCheck):
    """
    Reduced-form enumeration against the analytic class number formula.

    For the reference discriminants the group structure is compared too.
    """

    @property
    def name(self) -> str:
        return "class_number"

    @property
    def description(self) -> str:
        return "Reduced forms vs the class number formula"

    def run(self, context: CheckContext) -> CheckResult:
        D = context.D
        enumerated = len(enumerate_reduced(D))
        oracle = class_number_oracle(D)
        values = {"enumerated": enumerated, "oracle": oracle, "structure": context.G.cyclic_orders}
        passed = enumerated == oracle == context.G.h
        expected = TEST_DISCRIMINANTS.get(D)
        if expected is not None:
            values["expected"] = expected["class_number"]
            passed = passed and enumerated == expected["class_number"]
            passed = passed and context.G.cyclic_orders == expected["cyclic_orders"]
        message = f"h = {enumerated}" if passed else f"h: enumerated {enumerated}, oracle {oracle}"
        return self.result(passed, message, **values)


class ExactnessSpineCheck(VerificationCheck):
    """Component 0 of Theta_P(tau, h) equals theta_{a h^2} exactly."""

    @property
    def name(self) -> str:
        return "exactness_spine"

    @property
    def description(self) -> str:
        return "Component 0 of every vv theta equals the scalar theta of the acted class"

    def run(self, context: CheckContext) -> CheckResult:
        G, n_max = context.G, context.n_max
        N = G.disc.N
        mismatches = []
        for a in range(G.h):
            for h in range(G.h):
                comp = vv_theta(G, a, h, n_max).component(0)
                scalar = theta_ideal(G, G.class_action(h, a), n_max)
                off_lattice = [n for n in comp.coeffs if n % N]
                if off_lattice:
                    mismatches.append({"a": a, "h": h, "off_lattice": off_lattice[:5]})
                    continue
                for n in range(n_max + 1):
                    if comp.coefficient(n * N) != scalar.coefficient(n):
                        mismatches.append({"a": a, "h": h, "n": n})
                        break
        message = "all classes agree" if not mismatches else f"first mismatch {mismatches[0]}"
        return self.result(not mismatches, message, pairs=G.h * G.h, n_max=n_max, mismatches=mismatches)


class CuspidalityCheck(VerificationCheck):
    """Theta_P(tau, psi) has vanishing constant terms for every psi != 1."""

    @property
    def name(self) -> str:
        return "cuspidality"

    @property
    def description(self) -> str:
        return "Constant terms of Theta_P(psi), psi != 1, are exactly zero"

    def run(self, context: CheckContext) -> CheckResult:
        G, a = context.G, context.a_class
        failing = []
        for psi in context.nontrivial:
            F = vv_theta_psi(G, a, psi, 1)
            if not all(coeff_is_zero(c) for c in F.constant_terms()):
                failing.append(psi.index)
        eisenstein_constant = eisenstein_vv(G, a, 1).constant_terms()[0]
        passed = not failing and not coeff_is_zero(eisenstein_constant)
        message = (
            f"{len(context.nontrivial)} cusp forms" if passed else f"non-cuspidal characters {failing}"
        )
        return self.result(
            passed,
            message,
            characters=[psi.index for psi in context.nontrivial],
            failing=failing,
            eisenstein_constant=str(eisenstein_constant),
        )


class DimensionCheck(VerificationCheck):
    """
    Exact rank of {Theta_P(., h)} against (h + 2^(t-1)) / 2.

    The rank must be the same at n_max and n_max // 2, and the symmetric
    rank must equal the number of independent genus thetas.
    """

    @property
    def name(self) -> str:
        return "dimension"

    @property
    def description(self) -> str:
        return "dim Theta(P) = (h + 2^(t-1)) / 2, stable under truncation"

    def run(self, context: CheckContext) -> CheckResult:
        G = context.G
        space = context.cached(
            "theta_space", lambda: theta_space(G, context.a_class, context.n_max, with_bases=False)
        )
        values = space.to_dict()
        passed = space.matches_formula and space.rank == space.rank_half
        passed = passed and space.sym_rank == space.genus_rank
        expected = TEST_DISCRIMINANTS.get(G.D)
        if expected is not None:
            values["expected"] = expected["theta_dim"]
            passed = passed and space.rank == expected["theta_dim"]
        message = f"rank {space.rank}, formula {space.dimension_formula}"
        return self.result(passed, message, **values)
