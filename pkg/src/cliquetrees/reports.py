"""Pass/fail records returned by the theorem-check operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of checking one structural claim on one graph.

    ``applicable`` is False when the graph falls outside the claim's
    hypotheses (for example a complete graph); such a report counts as passed.
    """

    name: str
    passed: bool = True
    applicable: bool = True
    failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def not_applicable(cls, name: str, reason: str) -> CheckReport:
        return cls(name, passed=True, applicable=False, details={"reason": reason})

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "applicable": self.applicable,
            "failures": list(self.failures),
            "details": dict(self.details),
        }
