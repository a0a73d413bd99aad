# verification.py: pass/fail reports for invariant suites
"""
VerificationReport collects named checks. A failed check carries the
counterexample that broke it (a sector index, a basis triple, ...), so a
report is enough to reproduce the failure by hand.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ''
    counterexample: Optional[Any] = None

    def to_json(self) -> Dict[str, Any]:
        data = {'name': self.name, 'passed': self.passed}
        if self.detail:
            data['detail'] = self.detail
        if self.counterexample is not None:
            data['counterexample'] = self.counterexample
        return data


@dataclass
class VerificationReport:
    """Ordered list of checks for one subject (a group, a space, a ring table)."""

    subject: str
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = '', counterexample: Any = None) -> CheckResult:
        result = CheckResult(name, bool(passed), detail, counterexample)
        self.checks.append(result)
        return result

    def extend(self, other: 'VerificationReport', prefix: Optional[str] = None):
        for check in other.checks:
            name = f"{prefix}.{check.name}" if prefix else check.name
            self.checks.append(CheckResult(name, check.passed, check.detail, check.counterexample))

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            'subject': self.subject,
            'passed': self.passed,
            'checks': [c.to_json() for c in self.checks],
        }
