"""Structured result of checking one inequality on one graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

GE = ">="
EQ = "=="


@dataclass
class TheoremReport:
    """Outcome of one check.

    ``passed`` is true when the hypotheses fail (``vacuous``) or when
    ``lhs`` relates to ``rhs`` as ``relation`` demands and every side
    condition holds. ``lhs``/``rhs`` may still be filled in for vacuous
    reports when they could be evaluated.
    """

    id: str
    graph: str
    hypotheses_met: bool
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    relation: str = GE
    witnesses: dict[str, Any] = field(default_factory=dict)
    conditions: dict[str, bool] = field(default_factory=dict)
    note: str = ""

    @property
    def vacuous(self) -> bool:
        return not self.hypotheses_met

    @property
    def holds(self) -> Optional[bool]:
        """Whether the relation holds between ``lhs`` and ``rhs`` (``None`` if not evaluated)."""
        if self.lhs is None or self.rhs is None:
            return None
        return self.lhs == self.rhs if self.relation == EQ else self.lhs >= self.rhs

    @property
    def passed(self) -> bool:
        return self.vacuous or (bool(self.holds) and all(self.conditions.values()))

    @property
    def margin(self) -> Optional[Fraction]:
        if self.lhs is None or self.rhs is None:
            return None
        return Fraction(self.lhs) - Fraction(self.rhs)
