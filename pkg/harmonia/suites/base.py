"""Check registration and execution.

A suite module creates a ``SuiteRouter`` and registers its checks with the
``check`` decorator, in the order they should run. A check receives the
settings and returns an ``Outcome``; the router turns it into a
``VerificationReport``.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from ..config import Settings
from ..errors import HarmoniaError, UsageError
from ..models.report import Provenance, VerificationReport

logger = logging.getLogger(__name__)

# Exact table arithmetic, no differentiation involved.
EXACT_TOL = 1e-12


def rng_for(settings: Settings, stream: int) -> np.random.Generator:
    """Generator for one check, independent of which other checks run."""
    return np.random.default_rng([settings.seed, stream])


@dataclass
class Outcome:
    expected: str
    computed: Union[float, list[float]]
    residual: float
    tolerance: float
    passed: Optional[bool] = None

    def verdict(self) -> bool:
        if self.passed is not None:
            return self.passed
        return self.residual <= self.tolerance


CheckFunc = Callable[[Settings], Outcome]


@dataclass(frozen=True)
class Check:
    check_id: str
    anchor: str
    provenance: Provenance
    func: CheckFunc


class SuiteRouter:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[Check] = []

    def check(self, check_id: str, anchor: str, provenance: Provenance = "closed-form"):
        def register(func: CheckFunc) -> CheckFunc:
            self.checks.append(Check(check_id, anchor, provenance, func))
            return func

        return register

    def select(self, section: Optional[str] = None) -> list[Check]:
        """Checks in registration order, only those about one section when given."""
        if section is None:
            return list(self.checks)
        return [check for check in self.checks if check.check_id.split(".", 1)[0] == section]

    def run(self, settings: Settings) -> list[VerificationReport]:
        checks = self.select(settings.section)
        logger.info("suite %s: %d checks", self.name, len(checks))
        reports = [self._run_check(check, settings) for check in checks]
        failed = sum(not r.passed for r in reports)
        logger.info("suite %s: %d passed, %d failed", self.name, len(reports) - failed, failed)
        return reports

    def run_one(self, check_id: str, settings: Settings) -> VerificationReport:
        for check in self.checks:
            if check.check_id == check_id:
                return self._run_check(check, settings)
        raise UsageError(f"suite {self.name!r} has no check {check_id!r}")

    def _run_check(self, check: Check, settings: Settings) -> VerificationReport:
        started = time.perf_counter()
        try:
            outcome = check.func(settings)
            report = VerificationReport(
                check_id=check.check_id,
                anchor=check.anchor,
                expected=outcome.expected,
                provenance=check.provenance,
                computed=_as_floats(outcome.computed),
                residual=float(outcome.residual),
                tolerance=float(outcome.tolerance),
                passed=outcome.verdict(),
            )
        except HarmoniaError as exc:
            logger.error("check %s raised %s: %s", check.check_id, type(exc).__name__, exc.detail)
            report = VerificationReport(
                check_id=check.check_id,
                anchor=check.anchor,
                expected=f"error: {type(exc).__name__}: {exc.detail}",
                provenance=check.provenance,
                computed=0.0,
                residual=0.0,
                tolerance=0.0,
                passed=False,
            )
        elapsed = time.perf_counter() - started
        logger.debug("check %s: passed=%s residual=%.3g (%.2fs)", check.check_id, report.passed, report.residual, elapsed)
        return report.model_copy(update={"wall_time": elapsed})


def _as_floats(value: Union[float, list[float]]) -> Union[float, list[float]]:
    if isinstance(value, (list, tuple)):
        return [float(v) for v in value]
    return float(value)
