"""
Value types shared by every verification: facts, rule firings, reports.
"""

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

TOOL_VERSION = "1.0.0"


@dataclass(frozen=True)
class RuleFiring:
    rule: str
    anchor: str
    detail: str

    def to_dict(self) -> Dict[str, str]:
        return {"rule": self.rule, "anchor": self.anchor, "detail": self.detail}


@dataclass(frozen=True)
class Fact:
    name: str
    value: Any
    anchor: str
    passed: bool
    expected: Any = None

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "name": self.name,
            "value": to_jsonable(self.value),
            "anchor": self.anchor,
            "pass": self.passed,
        }
        if self.expected is not None:
            out["expected"] = to_jsonable(self.expected)
        return out


def to_jsonable(value: Any) -> Any:
    """Exact values become JSON: big ints stay ints, fractions become 'a/b', inf becomes 'inf'."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    return str(value)


@dataclass
class VerificationReport:
    construction: str
    inputs: Dict[str, Any]
    facts: List[Fact] = field(default_factory=list)
    certificates: List[RuleFiring] = field(default_factory=list)
    artifacts: Dict[str, str] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    timing: Optional[float] = None

    def check(self, name: str, value: Any, expected: Any, anchor: str) -> Fact:
        fact = Fact(name, value, anchor, value == expected, expected)
        self.facts.append(fact)
        return fact

    def record(self, name: str, value: Any, anchor: str) -> Fact:
        """A computed value that is reported but asserts nothing beyond being computed."""
        fact = Fact(name, value, anchor, True)
        self.facts.append(fact)
        return fact

    def require(self, name: str, condition: bool, anchor: str) -> Fact:
        return self.check(name, bool(condition), True, anchor)

    def certify(self, firings: List[RuleFiring]):
        self.certificates.extend(firings)

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.facts)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failed_facts(self) -> List[Fact]:
        return [f for f in self.facts if not f.passed]

    def __getitem__(self, name: str) -> Any:
        for f in self.facts:
            if f.name == name:
                return f.value
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(f.name == name for f in self.facts)

    def to_dict(self, seedless: bool = False) -> Dict[str, Any]:
        out = {
            "construction": self.construction,
            "tool_version": TOOL_VERSION,
            "inputs": to_jsonable(self.inputs),
            "facts": [f.to_dict() for f in self.facts],
            "certificates": [c.to_dict() for c in self.certificates],
            "verdict": self.verdict,
        }
        if self.artifacts:
            out["artifacts"] = dict(self.artifacts)
        if self.notes:
            out["notes"] = list(self.notes)
        if not seedless and self.timing is not None:
            out["timing"] = round(self.timing, 6)
        return out

    def to_json(self, seedless: bool = False) -> str:
        return json.dumps(self.to_dict(seedless=seedless), indent=2)
