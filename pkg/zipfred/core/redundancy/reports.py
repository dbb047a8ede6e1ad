"""Report types of the redundancy lab."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class RedundancyReport:
    """Exact expected redundancy of the enumerative code against a fixed source.

    Attributes:
        achieved: E_p[log2 p(x^n) / q(x^n)] for the code's implied q.
        entropy: n H(p) in bits.
        expected_codelength: E_p[-log2 q(x^n)], the ideal codelength.
        expected_concrete_codelength: E_p[|encode(x^n)|] in whole bits.
        n: Block length.
        k: Alphabet size.
        types: Number of types summed over.
    """

    achieved: float
    entropy: float
    expected_codelength: float
    expected_concrete_codelength: float
    n: int
    k: int
    types: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "achieved": self.achieved,
            "entropy": self.entropy,
            "expected_codelength": self.expected_codelength,
            "expected_concrete_codelength": self.expected_concrete_codelength,
            "n": self.n,
            "k": self.k,
            "types": self.types,
        }


@dataclass(frozen=True)
class MinimaxResult:
    """Minimax expected redundancy of a finite class, from the capacity iteration.

    Attributes:
        value: max over members of D(W_m || q) for the witness mixture q,
            an upper estimate of the minimax redundancy in bits.
        capacity_gap: value minus the mutual information of the prior.
        prior: Weights over the class members.
        iterations: Iterations used.
        outcomes: Number of columns of the likelihood table.
    """

    value: float
    capacity_gap: float
    prior: Tuple[float, ...]
    iterations: int
    outcomes: int
    mixture: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "capacity_gap": self.capacity_gap,
            "prior": list(self.prior),
            "iterations": self.iterations,
            "outcomes": self.outcomes,
        }


@dataclass(frozen=True)
class PoissonEntropyReport:
    """Entropy of the type vector under Poisson(n) sampling.

    Attributes:
        lambdas: n p_i per symbol.
        h_type: sum_i H(poi(lambda_i)) in bits.
        low_part: Contribution of lambda_i below the threshold.
        high_part: Contribution of the remaining lambda_i.
        low_cap: sum over small lambda of 3 lambda - lambda log2 lambda.
        high_cap: sum over large lambda of 1/2 log2(2 pi e (lambda + 1/12)).
        threshold: Small-lambda cutoff.
    """

    lambdas: Tuple[float, ...]
    h_type: float
    low_part: float
    high_part: float
    low_cap: float
    high_cap: float
    threshold: float

    @property
    def cap(self) -> float:
        return self.low_cap + self.high_cap

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambdas": list(self.lambdas),
            "h_type": self.h_type,
            "low_part": self.low_part,
            "high_part": self.high_part,
            "low_cap": self.low_cap,
            "high_cap": self.high_cap,
            "threshold": self.threshold,
        }


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one property check.

    Attributes:
        claim: Identifier of the property.
        anchor: Formula of the property.
        passed: Whether the measured value satisfies the property.
        measured: Measured quantity.
        bound: Quantity it is compared against.
        margin: Slack in the passing direction (negative on failure).
        asserted: False for margin-only reports whose failure is not fatal.
        details: Inputs and intermediate values.
    """

    claim: str
    anchor: str
    passed: bool
    measured: float
    bound: float
    margin: float
    asserted: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "anchor": self.anchor,
            "passed": self.passed,
            "measured": self.measured,
            "bound": self.bound,
            "margin": self.margin,
            "asserted": self.asserted,
            "details": dict(self.details),
        }
