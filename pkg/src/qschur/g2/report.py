"""Per-instance results of a formula corpus check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass
class FormulaCheck:
    formula_id: str
    instance: str
    status: str  # "pass" or "fail"
    lhs: str
    rhs: str
    readings: Optional[Dict[str, bool]] = None

    def to_json(self) -> dict:
        out = {
            "formula_id": self.formula_id,
            "instance": self.instance,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.readings is not None:
            out["readings"] = dict(sorted(self.readings.items()))
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: List[FormulaCheck] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def mismatches(self) -> List[FormulaCheck]:
        return [c for c in self.checks if c.status != "pass"]

    @property
    def passed(self) -> bool:
        return bool(self.checks) and not self.mismatches

    def formula_ids(self) -> List[str]:
        seen = {}
        for c in self.checks:
            seen.setdefault(c.formula_id, None)
        return list(seen)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": len(self.checks),
            "mismatches": len(self.mismatches),
            "notes": self.notes,
            "results": [c.to_json() for c in self.checks],
        }
