"""Verification reports shared by every checking routine.

A check is ``pass``, ``fail`` or ``discrepancy``.  A discrepancy records a
printed claim that exact computation contradicts; it is always shown with its
residual but does not fail the suite, because a corrected statement is checked
alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    residual: str = ""
    note: str = ""
    discrepancy: bool = False

    @property
    def status(self) -> str:
        if self.passed:
            return "pass"
        return "discrepancy" if self.discrepancy else "fail"

    def as_dict(self) -> dict:
        out = {"id": self.id, "status": self.status}
        if self.residual:
            out["residual"] = self.residual
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed or c.discrepancy for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def discrepancies(self) -> list[Check]:
        return [c for c in self.checks if c.status == "discrepancy"]

    def get(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def add(self, check_id: str, passed: bool, residual: object = "", note: str = "") -> bool:
        self.checks.append(Check(check_id, bool(passed), "" if passed else str(residual), note))
        return bool(passed)

    def expect_zero(self, check_id: str, residual, note: str = "") -> bool:
        """Record a check whose residual must be exactly zero."""
        return self.add(check_id, _is_zero(residual), residual, note)

    def claim(self, check_id: str, holds: bool, residual: object = "", note: str = "") -> bool:
        """Record a printed claim; if it does not hold it becomes a discrepancy."""
        self.checks.append(Check(check_id, bool(holds), "" if holds else str(residual), note, not holds))
        return bool(holds)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.passed, c.residual, c.note, c.discrepancy))

    def as_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "checks": [c.as_dict() for c in self.checks],
        }
        if self.elapsed is not None:
            out["elapsed_ms"] = int(self.elapsed * 1000)
        return out

    def render_text(self) -> str:
        lines = []
        tags = {"pass": "PASS", "fail": "FAIL", "discrepancy": "DISC"}
        for c in self.checks:
            line = f"{tags[c.status]} {c.id}"
            if c.residual:
                line += f" :: residual {c.residual}"
            if c.note:
                line += f" [{c.note}]"
            lines.append(line)
        n_fail, n_disc = len(self.failures), len(self.discrepancies)
        summary = f"suite {self.suite}: {'PASS' if not n_fail else 'FAIL'} ({len(self.checks)} checks, {n_fail} failed"
        if n_disc:
            summary += f", {n_disc} discrepancies"
        summary += ")"
        if self.elapsed is not None:
            summary += f" in {int(self.elapsed * 1000)} ms"
        lines.append(summary)
        return "\n".join(lines)

    def __bool__(self) -> bool:
        return self.passed


def _is_zero(x) -> bool:
    if not hasattr(x, "is_zero"):
        return x == 0
    z = x.is_zero
    return z() if callable(z) else bool(z)
