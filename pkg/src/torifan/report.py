"""Step-by-step verification reports with deterministic JSON and text output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def plain(value: Any) -> Any:
    """Convert exact values into JSON-friendly data (Fractions become 'p/q' strings)."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if hasattr(value, "coords"):
        return plain(value.coords)
    return str(value)


@dataclass
class Step:
    description: str
    expected: Any
    computed: Any
    passed: bool | None  # None: informational, no expectation exists
    source: str = ""


@dataclass
class Report:
    example: str
    steps: list = field(default_factory=list)

    def check(self, description, expected, computed, source="") -> bool:
        ok = plain(expected) == plain(computed)
        self.steps.append(Step(description, expected, computed, ok, source))
        return ok

    def verdict(self, description, ok: bool, computed, expected=None, source="") -> bool:
        self.steps.append(Step(description, expected, computed, bool(ok), source))
        return bool(ok)

    def note(self, description, computed, source=""):
        self.steps.append(Step(description, None, computed, None, source))

    @property
    def overall(self) -> bool:
        return all(s.passed for s in self.steps if s.passed is not None)

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "overall": self.overall,
            "steps": [
                {
                    "description": s.description,
                    "expected": plain(s.expected),
                    "computed": plain(s.computed),
                    "pass": s.passed,
                    "source": s.source,
                }
                for s in self.steps
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"== {self.example} =="]
        for s in self.steps:
            mark = {True: "PASS", False: "FAIL", None: "INFO"}[s.passed]
            line = f"[{mark}] {s.description}: {json.dumps(plain(s.computed))}"
            if s.passed is False:
                line += f" (expected {json.dumps(plain(s.expected))})"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)
