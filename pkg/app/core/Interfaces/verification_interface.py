from dataclasses import dataclass, field
from typing import Optional, Protocol

from app.core.Interfaces.params_interface import ParamVector

SUITES = ("arith", "group", "subgroups", "algebra", "invariants", "oracle")


@dataclass
class CheckResult:
    """Where a check failed: suite, check name, vector key (None for arith)."""

    suite: str
    check: str
    vector: Optional[str]
    detail: str


@dataclass
class VectorOutcome:
    vector: str
    checked: bool
    failures: list[CheckResult] = field(default_factory=list)
    relators: Optional[tuple[int, ...]] = None
    fingerprint: Optional[str] = None


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    skipped: int = 0
    failures: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def locus(self) -> Optional[CheckResult]:
        return self.failures[0] if self.failures else None


class VerificationInterface(Protocol):
    def run_suite(self, suite: str, p: int, bound: int) -> SuiteReport:
        pass

    def check_vector(self, suite: str, vector: ParamVector) -> VectorOutcome:
        pass
