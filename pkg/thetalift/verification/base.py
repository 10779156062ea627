"""
Base classes and registry for verification checks.

A check compares two independent computations of the same quantity for one
discriminant and reports both values with the tolerance applied.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import mpmath as mp
import numpy as np

from thetalift.classgroup import ClassCharacter, ClassGroup, characters, class_group
from thetalift.config import DEFAULT_CONFIG, PrecisionContext, RunConfig


def fmt(x, digits: int = 12):
    """Decimal string of a real number, [re, im] of a complex one."""
    if isinstance(x, mp.mpc) or isinstance(x, complex):
        return [mp.nstr(mp.re(x), digits), mp.nstr(mp.im(x), digits)]
    return mp.nstr(x, digits)


@dataclass
class CheckResult:
    """
    Outcome of one check.

    Attributes:
        name: Check name
        passed: Whether every comparison held
        message: Summary, naming the failing item when any
        values: Compared values, JSON-ready
        tolerance: Tolerance applied, when numeric
        skipped: The check does not apply to this discriminant
    """

    name: str
    passed: bool
    message: str = ""
    values: Dict[str, Any] = field(default_factory=dict)
    tolerance: Optional[float] = None
    skipped: bool = False


@dataclass
class CheckContext:
    """
    Shared state of a verification run for one discriminant.

    Expensive objects (theta bases, Gram matrices) are built once and kept
    in cache for every check that needs them.
    """

    config: RunConfig = field(default_factory=lambda: DEFAULT_CONFIG)
    G: ClassGroup = field(init=False)
    ctx: PrecisionContext = field(init=False)
    rng: np.random.Generator = field(init=False, repr=False)
    cache: Dict[str, Any] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.config.validate()
        self.G = class_group(self.config.disc)
        self.ctx = self.config.precision()
        self.rng = np.random.default_rng(self.config.seed)
        if self.config.a_class >= self.G.h:
            raise ValueError(f"a_class={self.config.a_class} out of range for h={self.G.h}")

    @property
    def D(self) -> int:
        return self.G.D

    @property
    def a_class(self) -> int:
        return self.config.a_class

    @property
    def n_max(self) -> int:
        return self.config.n_max

    @property
    def chars(self) -> List[ClassCharacter]:
        return self.cached("characters", lambda: characters(self.G))

    @property
    def nontrivial(self) -> List[ClassCharacter]:
        return [psi for psi in self.chars if not psi.is_trivial()]

    def cached(self, key: str, build: Callable[[], Any]) -> Any:
        if key not in self.cache:
            self.cache[key] = build()
        return self.cache[key]


class VerificationCheck(ABC):
    """Abstract base class for verification checks."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry key."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """Human-readable description."""
        pass

    def applies_to(self, G: ClassGroup) -> bool:
        """Whether the check is meaningful for this class group."""
        return True

    @abstractmethod
    def run(self, context: CheckContext) -> CheckResult:
        """Run the check."""
        pass

    def result(self, passed: bool, message: str = "", tolerance: Optional[float] = None, **values) -> CheckResult:
        return CheckResult(
            name=self.name, passed=passed, message=message, values=values, tolerance=tolerance
        )

    def skip(self, message: str) -> CheckResult:
        return CheckResult(name=self.name, passed=True, message=message, skipped=True)


# Registry of available checks, in run order
CHECK_REGISTRY: Dict[str, VerificationCheck] = {}


def register_check(check: VerificationCheck) -> None:
    """Register a check in the registry."""
    CHECK_REGISTRY[check.name] = check


def get_available_checks() -> List[str]:
    """Get list of registered check names."""
    return list(CHECK_REGISTRY.keys())


def get_check(name: str) -> VerificationCheck:
    """Get a registered check by name."""
    if name not in CHECK_REGISTRY:
        raise ValueError(f"Unknown check: {name}. Valid: {get_available_checks()}")
    return CHECK_REGISTRY[name]
