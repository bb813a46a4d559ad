"""
Report documents for Adelic Curves
Holds per-check outcomes and results, renders them as canonical JSON or text
and persists them under the reports directory
"""
import json
import os
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Literal, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, computed_field

from ..config.settings import settings

Status = Literal["pass", "fail", "skip"]


def to_jsonable(value: Any) -> Any:
    """Exact scalars and algebraic objects as plain JSON values"""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


class Check(BaseModel):
    """Outcome of one named verification"""

    model_config = ConfigDict(frozen=True)

    name: str
    status: Status
    detail: Optional[Any] = None
    witness: Optional[Any] = None
    timing_ms: Optional[float] = None

    @classmethod
    def of(cls, name: str, passed: bool, detail: Any = None, witness: Any = None) -> "Check":
        return cls(
            name=name,
            status="pass" if passed else "fail",
            detail=to_jsonable(detail),
            witness=to_jsonable(witness),
        )

    @classmethod
    def skipped(cls, name: str, reason: str) -> "Check":
        return cls(name=name, status="skip", detail=reason)

    @property
    def passed(self) -> bool:
        return self.status != "fail"


class Report(BaseModel):
    command: str
    seed: Optional[int] = None
    precision: int = Field(default_factory=lambda: settings.WORKING_PRECISION, ge=1)
    curve: Optional[Dict[str, Any]] = None
    results: Dict[str, Any] = Field(default_factory=dict)
    checks: List[Check] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add_result(self, key: str, value: Any) -> None:
        self.results[key] = to_jsonable(value)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        if not check.passed:
            logger.warning(f"Check failed: {check.name}")
        return check

    def extend(self, checks: List[Check]) -> None:
        for check in checks:
            self.add(check)

    @contextmanager
    def timed(self) -> Iterator[None]:
        """Stamp the checks added inside the block with its duration when REPORT_TIMINGS is set"""
        first = len(self.checks)
        start = time.perf_counter()
        yield
        if not settings.REPORT_TIMINGS:
            return
        elapsed = (time.perf_counter() - start) * 1000
        for index in range(first, len(self.checks)):
            self.checks[index] = self.checks[index].model_copy(update={"timing_ms": elapsed})

    def render_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)

    def render_text(self) -> str:
        lines = [f"{settings.APP_NAME}: {self.command}"]
        if self.curve is not None:
            lines.append(f"curve: {json.dumps(self.curve, sort_keys=True)}")
        for key in sorted(self.results):
            lines.append(f"{key}: {json.dumps(self.results[key], sort_keys=True)}")
        for check in self.checks:
            lines.append(f"[{check.status.upper()}] {check.name}")
        lines.append("all checks passed" if self.passed else "some checks failed")
        return "\n".join(lines)


class ReportWriter:
    """Writes reports to disk"""

    def write(self, report: Report, path: Optional[str] = None) -> str:
        if path is None:
            path = os.path.join(settings.get_base_dirs()["reports"], f"{report.command}.json")
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(report.render_json())
            handle.write("\n")
        logger.info(f"Report written to {path}")
        return path


# Global report writer instance
report_writer = ReportWriter()
