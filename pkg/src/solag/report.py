"""Outcome records shared by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    """One named family of exact assertions.

    ``count`` is how many individual equalities were evaluated;
    ``counterexample`` holds the serialized inputs of the first failure.
    """

    name: str
    passed: bool = True
    count: int = 0
    counterexample: dict[str, Any] | None = None

    def record(self, ok: bool, **inputs: Any) -> bool:
        self.count += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = inputs
        return ok

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "count": self.count,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def check(self, name: str) -> Check:
        """Return the check called ``name``, creating it on first use."""
        for c in self.checks:
            if c.name == name:
                return c
        c = Check(name)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        """Fold ``other`` in, merging checks that share a name."""
        for c in other.checks:
            mine = self.check(c.name)
            if not c.passed and mine.passed:
                mine.passed = False
                mine.counterexample = c.counterexample
            mine.count += c.count
        self.wall_time += other.wall_time

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }
        first = self.first_failure
        out["first_failure"] = first.name if first else None
        if timing:
            out["wall_time_ms"] = int(round(self.wall_time * 1000))
        return out
