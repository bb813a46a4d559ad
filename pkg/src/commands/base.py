"""
Shared plumbing for the report-building commands
"""
from typing import Any, Callable

from loguru import logger

from ..config.run_config import RunConfig
from ..curves.model import CurveModel
from ..utils.errors import (
    AdeleError,
    InvalidSpecError,
    NotSecondKindError,
    ReducibleError,
    SingularModelError,
    UnsupportedCharacteristicError,
)
from ..utils.report import Check, Report

# Errors that mean the input was unusable rather than that a check failed
INPUT_ERRORS = (InvalidSpecError, UnsupportedCharacteristicError, NotSecondKindError, SingularModelError, ReducibleError)


class Command:
    """A CLI subcommand: builds one report from a curve and a run configuration"""

    name = "command"

    def run(self, curve: CurveModel, config: RunConfig) -> Report:
        logger.info(f"Running {self.name} on {curve!r}")
        report = Report(command=self.name, seed=config.seed, precision=config.precision, curve=curve.to_spec())
        self.build(report, curve, config)
        logger.info(f"{self.name} finished: {'pass' if report.passed else 'fail'}")
        return report

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        raise NotImplementedError

    def check(self, report: Report, name: str, compute: Callable[[], Any]) -> Check:
        """
        Run `compute` as a named check. It may return a Check, a list of Checks, a
        bool or a (passed, detail) pair; a list is recorded in full and followed by
        a summary check under `name`. Library errors other than input errors become
        a failed check carrying the error code.
        """
        with report.timed():
            self._record(report, name, compute)
        return report.checks[-1]

    @staticmethod
    def _record(report: Report, name: str, compute: Callable[[], Any]) -> None:
        try:
            outcome = compute()
        except INPUT_ERRORS:
            raise
        except AdeleError as e:
            logger.warning(f"{name}: {e.code}: {e.message}")
            report.add(Check.of(name, False, e.to_dict()))
            return
        if isinstance(outcome, Check):
            report.add(outcome.model_copy(update={"name": name}))
        elif isinstance(outcome, list):
            report.extend(outcome)
            report.add(Check.of(name, all(check.passed for check in outcome), {"checks": len(outcome)}))
        elif isinstance(outcome, tuple):
            passed, detail = outcome
            report.add(Check.of(name, passed, detail))
        else:
            report.add(Check.of(name, bool(outcome)))
