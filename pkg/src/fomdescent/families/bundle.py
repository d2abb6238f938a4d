"""Verification bundles: named boolean checks plus supporting data."""

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass
class Bundle:
    family: str
    checks: Dict[str, bool] = field(default_factory=dict)
    data: Dict[str, Any] = field(default_factory=dict)
    outcome: Any = None

    def check(self, name, value):
        self.checks[name] = bool(value)
        return bool(value)

    @property
    def ok(self):
        return all(self.checks.values())

    def failed(self):
        return [k for k, v in self.checks.items() if not v]

    def to_json(self):
        out = {"family": self.family, "checks": dict(self.checks), "all_passed": self.ok}
        out.update(self.data)
        if self.outcome is not None:
            out["definable"] = self.outcome.definable
            out["outcome"] = self.outcome.kind
            out["candidates_tried"] = getattr(self.outcome, "tried", None)
        return out
