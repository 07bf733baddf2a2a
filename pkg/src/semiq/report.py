"""Pass/fail reports shared by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityResult:
    """Outcome of checking one identity over every sampled tuple."""

    name: str
    passed: bool
    checked: int
    witness: str | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "witness": self.witness}


@dataclass
class Report:
    title: str
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> IdentityResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def first_failure(self) -> IdentityResult | None:
        return next((r for r in self.results if not r.passed), None)

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed, "results": [r.to_json() for r in self.results]}

    def __str__(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            extra = f"  witness: {r.witness}" if r.witness else ""
            lines.append(f"  [{mark}] {r.name} ({r.checked} cases){extra}")
        return "\n".join(lines)


class Tally:
    """Accumulates one identity's cases, keeping the first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.witness: str | None = None

    def record(self, ok: bool, describe) -> None:
        self.checked += 1
        if not ok and self.witness is None:
            self.witness = describe() if callable(describe) else str(describe)

    def result(self) -> IdentityResult:
        return IdentityResult(self.name, self.witness is None, self.checked, self.witness)
