"""
Verification orchestrator service.

Runs the registered checks for one discriminant, tracks progress and
collects the results into a report.

Example:
    >>> orchestrator = VerificationOrchestrator()
    >>> run = orchestrator.verify(-23, checks=["class_number", "cuspidality"])
    >>> run.passed
    True
"""

import logging
import threading
import time
import uuid
from dataclasses import dataclass, field, replace
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from thetalift.config import DEFAULT_CONFIG, RunConfig
from thetalift.io import CheckResultModel, VerificationReportModel
from thetalift.verification import CheckContext, get_available_checks, get_check

logger = logging.getLogger(__name__)


# =============================================================================
# RUN STATUS AND MODELS
# =============================================================================

class CheckStatus(str, Enum):
    """Status of a check or of a whole run."""
    PENDING = "pending"
    RUNNING = "running"
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    ERROR = "error"


@dataclass
class CheckRecord:
    """Result of one check inside a run."""
    name: str
    status: CheckStatus = CheckStatus.PENDING
    message: str = ""
    values: Dict[str, Any] = field(default_factory=dict)
    tolerance: Optional[float] = None
    duration: float = 0.0

    def to_model(self) -> CheckResultModel:
        return CheckResultModel(
            name=self.name,
            status=self.status.value,
            message=self.message,
            values=self.values,
            tolerance=None if self.tolerance is None else f"{self.tolerance:g}",
            duration=round(self.duration, 3),
        )


@dataclass
class VerificationRun:
    """
    Tracks state of a verification run.

    Attributes:
        run_id: Short identifier
        disc: Discriminant under test
        config: Run configuration
        status: PENDING, RUNNING, then PASSED, FAILED or ERROR
        progress: Fraction of checks finished
        current_step: Check currently running
        checks: Records in run order
    """
    run_id: str
    disc: int
    config: RunConfig
    status: CheckStatus = CheckStatus.PENDING
    created_at: datetime = field(default_factory=datetime.now)
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    progress: float = 0.0
    current_step: str = ""
    checks: List[CheckRecord] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASSED

    @property
    def failing(self) -> List[str]:
        return [c.name for c in self.checks if c.status in (CheckStatus.FAILED, CheckStatus.ERROR)]

    def to_dict(self) -> Dict[str, Any]:
        """Convert run to dictionary."""
        return {
            "run_id": self.run_id,
            "disc": self.disc,
            "status": self.status.value,
            "progress": self.progress,
            "current_step": self.current_step,
            "created_at": self.created_at.isoformat(),
            "started_at": self.started_at.isoformat() if self.started_at else None,
            "completed_at": self.completed_at.isoformat() if self.completed_at else None,
            "error": self.error,
            "checks": {c.name: c.status.value for c in self.checks},
        }

    def to_report(self) -> VerificationReportModel:
        """The JSON report of the run."""
        return VerificationReportModel(
            disc=self.disc,
            status=self.status.value,
            passed=self.passed,
            checks=[c.to_model() for c in self.checks],
            config={
                "prec_bits": self.config.prec_bits,
                "n_max": self.config.n_max,
                "quad_nodes": self.config.quad_nodes,
                "height_T": self.config.height_T,
                "a_class": self.config.a_class,
                "seed": self.config.seed,
            },
            started_at=self.started_at.isoformat() if self.started_at else None,
            completed_at=self.completed_at.isoformat() if self.completed_at else None,
        )


# =============================================================================
# VERIFICATION ORCHESTRATOR
# =============================================================================

class VerificationOrchestrator:
    """
    Orchestrates verification runs.

    Runs are kept in memory so their progress can be inspected from
    another thread while verify() is working.
    """

    def __init__(self):
        self._runs: Dict[str, VerificationRun] = {}
        self._lock = threading.Lock()

    def get_run(self, run_id: str) -> Optional[VerificationRun]:
        with self._lock:
            return self._runs.get(run_id)

    def list_runs(self) -> List[VerificationRun]:
        with self._lock:
            runs = list(self._runs.values())
        runs.sort(key=lambda r: r.created_at, reverse=True)
        return runs

    def verify(
        self,
        disc: int,
        config: Optional[RunConfig] = None,
        checks: Optional[List[str]] = None,
        progress_callback: Optional[Callable[[float, str], None]] = None,
    ) -> VerificationRun:
        """
        Run the selected checks for one discriminant.

        Args:
            disc: Discriminant D
            config: Run configuration (disc is overridden)
            checks: Check names, all registered checks when None or empty
            progress_callback: Optional callback(progress, step) for updates

        Returns:
            The finished run. Exceptions inside a check become ERROR records.

        Raises:
            ValueError: For an invalid discriminant, configuration or check name
        """
        config = replace(config or DEFAULT_CONFIG, disc=disc)
        names = list(checks or config.checks or get_available_checks())
        selected = [get_check(name) for name in names]
        context = CheckContext(config=config)

        run = VerificationRun(run_id=str(uuid.uuid4())[:8], disc=context.D, config=config)
        run.checks = [CheckRecord(name=c.name) for c in selected]
        with self._lock:
            self._runs[run.run_id] = run

        def update_progress(progress: float, step: str):
            run.progress = progress
            run.current_step = step
            if progress_callback:
                progress_callback(progress, step)

        run.status = CheckStatus.RUNNING
        run.started_at = datetime.now()
        update_progress(0.0, "Starting verification")

        for i, (check, record) in enumerate(zip(selected, run.checks)):
            update_progress(i / len(selected), f"Running {check.name}")
            if not check.applies_to(context.G):
                record.status = CheckStatus.SKIPPED
                record.message = f"Not applicable to D={context.D}"
                continue
            record.status = CheckStatus.RUNNING
            start = time.perf_counter()
            try:
                result = check.run(context)
            except Exception as e:
                logger.exception(f"Check {check.name} raised for D={context.D}")
                record.status = CheckStatus.ERROR
                record.message = f"{type(e).__name__}: {e}"
            else:
                if result.skipped:
                    record.status = CheckStatus.SKIPPED
                else:
                    record.status = CheckStatus.PASSED if result.passed else CheckStatus.FAILED
                record.message = result.message
                record.values = result.values
                record.tolerance = result.tolerance
            record.duration = time.perf_counter() - start
            logger.info(f"{check.name}: {record.status.value} ({record.duration:.2f}s)")

        run.status = CheckStatus.FAILED if run.failing else CheckStatus.PASSED
        run.completed_at = datetime.now()
        update_progress(1.0, "Complete")
        return run


# Global orchestrator instance
_orchestrator: Optional[VerificationOrchestrator] = None


def _get_orchestrator() -> VerificationOrchestrator:
    global _orchestrator
    if _orchestrator is None:
        _orchestrator = VerificationOrchestrator()
    return _orchestrator


def verify_discriminant(
    disc: int, config: Optional[RunConfig] = None, checks: Optional[List[str]] = None
) -> VerificationRun:
    """Run the checks for one discriminant with the global orchestrator."""
    return _get_orchestrator().verify(disc, config=config, checks=checks)
