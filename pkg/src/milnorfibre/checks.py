"""Report objects returned by the consistency checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    anchor: str = ""
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)

    def note(self, msg: str) -> None:
        self.notes.append(msg)

    def require(self, cond: bool, msg: str) -> bool:
        if not cond:
            self.violations.append(msg)
        return cond

    def merge(self, other: "CheckReport") -> None:
        self.violations.extend(f"{other.name}: {v}" for v in other.violations)
        self.notes.extend(f"{other.name}: {n}" for n in other.notes)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" [{self.anchor}]" if self.anchor else ""
        return f"{status} {self.name}{tail}"

    def to_json(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "passed": self.passed,
                "violations": list(self.violations), "notes": list(self.notes)}
