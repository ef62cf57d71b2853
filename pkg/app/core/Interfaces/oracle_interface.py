from dataclasses import dataclass, field
from typing import Optional


@dataclass
class IdentityCheck:
    name: str
    checked: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass
class ClosedFormReport:
    exhaustive: bool
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.checks if not check.ok]
