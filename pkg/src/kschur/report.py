from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerifyReport:
    """Outcome of one identity check on one parameter instance."""

    id: str
    params: dict[str, Any]
    passed: bool
    witness: dict[str, Any] | None = None
    millis: float = 0.0
    notes: list[str] = field(default_factory=list)

    def to_json(self, timings: bool = False) -> dict:
        out: dict[str, Any] = {"id": self.id, "params": self.params, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = list(self.notes)
        if timings:
            out["millis"] = round(self.millis, 3)
        return out
