"""Structured outcomes of inequality checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class Violation:
    """A failed comparison at index ``k``; ``relation`` names the inequality
    that ``left`` and ``right`` were supposed to satisfy."""

    part: str
    k: int
    left: int
    right: int
    relation: str

    def to_json(self) -> dict:
        return {
            "part": self.part,
            "k": self.k,
            "left": str(self.left),
            "right": str(self.right),
            "relation": self.relation,
        }


@dataclass(frozen=True)
class Part:
    """One sub-claim. ``holds is None`` means not applicable."""

    name: str
    holds: bool | None
    violation: Violation | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "violation": None if self.violation is None else self.violation.to_json(),
        }


@dataclass(frozen=True)
class Verdict:
    statement_id: str
    premise_holds: bool | None
    parts: tuple[Part, ...]
    notes: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def conclusion_holds(self) -> bool:
        return all(p.holds is not False for p in self.parts)

    @property
    def first_violation(self) -> Violation | None:
        for p in self.parts:
            if p.holds is False:
                return p.violation
        return None

    @property
    def refutes(self) -> bool:
        """Premise true but conclusion false: for a proved statement, a bug."""
        return self.premise_holds is True and not self.conclusion_holds

    def part(self, name: str) -> Part:
        for p in self.parts:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_json(self) -> dict:
        fv = self.first_violation
        return {
            "statement_id": self.statement_id,
            "premise_holds": self.premise_holds,
            "conclusion_holds": self.conclusion_holds,
            "first_violation": None if fv is None else fv.to_json(),
            "parts": [p.to_json() for p in self.parts],
            "notes": self.notes,
            "data": self.data,
        }


def chain(
    name: str,
    relation: str,
    comparisons: Iterable[tuple[int, int, int]],
    op: str = "<=",
) -> Part:
    """Check ``left op right`` for each ``(k, left, right)``; stop at the first failure."""
    if op not in ("<=", ">="):
        raise ValueError(f"unsupported comparison {op!r}")
    for k, left, right in comparisons:
        ok = left <= right if op == "<=" else left >= right
        if not ok:
            return Part(name, False, Violation(name, k, left, right, relation))
    return Part(name, True)
