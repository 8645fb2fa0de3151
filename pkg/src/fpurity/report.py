"""Small shared result containers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ConsistencyReport:
    """Result of a battery of containment checks that theory says must pass.

    A nonempty violation list never means new mathematics: it means a bug
    in this implementation, and callers treat it that way.
    """

    subject: str
    checks: int = 0
    violations: list[dict] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, **where):
        self.checks += 1
        if not ok:
            self.violations.append(dict(where))
