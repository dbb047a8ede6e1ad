"""BoundReport: a closed-form bound with its per-term breakdown."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional
import math


@dataclass(frozen=True)
class BoundReport:
    """Value of a displayed bound together with the signed terms it sums.

    Attributes:
        name: Identifier of the claim.
        value: Bound in bits; always ``math.fsum(terms.values())``.
        terms: Signed contributions in evaluation order.
        params: Inputs (alpha, c, k, n, d, ...).
        anchor: Formula of the claim being evaluated.
        constants: Derived constants (C_{k,alpha}, c_1, ...).
        notes: Quantities that do not enter the value (raw vs clamped
            arguments, exact sums, ratios, margins).
    """

    name: str
    value: float
    terms: Dict[str, float]
    params: Dict[str, Any]
    anchor: str
    constants: Dict[str, float] = field(default_factory=dict)
    notes: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_terms(
        cls,
        name: str,
        terms: Dict[str, float],
        params: Dict[str, Any],
        anchor: str,
        constants: Optional[Dict[str, float]] = None,
        notes: Optional[Dict[str, Any]] = None,
    ) -> "BoundReport":
        """Build a report whose value is the compensated sum of ``terms``."""
        return cls(
            name=name,
            value=math.fsum(terms.values()),
            terms=dict(terms),
            params=dict(params),
            anchor=anchor,
            constants=dict(constants or {}),
            notes=dict(notes or {}),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "value": self.value,
            "terms": dict(self.terms),
            "params": dict(self.params),
            "anchor": self.anchor,
            "constants": dict(self.constants),
            "notes": dict(self.notes),
        }
