"""Finite probability distributions and the Zipf family."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Optional, Sequence, Tuple
import logging
import math

import numpy as np

from ..exceptions import ValidationError
from ..utils import (
    PROB_TOL,
    lab_float,
    neg_xlog2x,
    validate_positive_int,
    validate_probability_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Distribution:
    """Probability vector over the alphabet [k] = {1, ..., k}.

    Entry ``probs[i-1]`` is the probability of symbol ``i``. The sorted view
    ``p_(1) >= p_(2) >= ... >= p_(k)`` breaks ties by ascending original index.
    """

    probs: Tuple[float, ...]
    _order: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        arr = validate_probability_vector(self.probs)
        object.__setattr__(self, "probs", tuple(float(x) for x in arr))
        order = np.argsort(-arr, kind="stable")
        object.__setattr__(self, "_order", tuple(int(i) for i in order))

    @property
    def k(self) -> int:
        """Support size."""
        return len(self.probs)

    @property
    def array(self) -> np.ndarray:
        """Probabilities as a fresh numpy array."""
        return np.asarray(self.probs, dtype=float)

    @property
    def sorted_probs(self) -> Tuple[float, ...]:
        """Probabilities in nonincreasing order."""
        return tuple(self.probs[i] for i in self._order)

    @property
    def sort_order(self) -> Tuple[int, ...]:
        """0-based indices of the original entries in sorted order."""
        return self._order

    def entropy(self) -> float:
        """Shannon entropy H(p) in bits."""
        return float(np.sum(neg_xlog2x(self.array)))

    def permuted(self, perm: Sequence[int]) -> "Distribution":
        """Return the relabeled distribution q with q[i] = p[perm[i]] (0-based)."""
        if sorted(perm) != list(range(self.k)):
            raise ValidationError("Not a permutation of the alphabet", {"perm": list(perm)})
        return Distribution(tuple(self.probs[j] for j in perm))

    def support(self) -> Tuple[int, ...]:
        """0-based indices with positive probability."""
        return tuple(i for i, p in enumerate(self.probs) if p > 0.0)

    def is_close(self, other: "Distribution", tol: float = PROB_TOL) -> bool:
        """Componentwise equality within ``tol``."""
        return self.k == other.k and all(
            abs(a - b) <= tol for a, b in zip(self.probs, other.probs)
        )

    def to_dict(self) -> Dict[str, Any]:
        """Serialize with decimal-string probabilities."""
        return {"kind": "explicit", "probs": [repr(p) for p in self.probs]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Distribution":
        """Create a Distribution from ``{"probs": [...]}``."""
        return cls(tuple(float(x) for x in data["probs"]))

    @classmethod
    def uniform(cls, k: int) -> "Distribution":
        """Uniform distribution over k symbols."""
        k = validate_positive_int(k, "k")
        return cls(tuple([1.0 / k] * k))


@lru_cache(maxsize=1024)
def zipf_normalizer(alpha: float, k: int) -> float:
    """C_{k,alpha} = sum_{i=1}^k i^-alpha by exact (compensated) summation."""
    return math.fsum(i ** (-alpha) for i in range(1, k + 1))


@dataclass(frozen=True)
class ZipfClass:
    """Zipf law with power ``alpha`` over ``k`` symbols.

    Attributes:
        alpha: Power, strictly greater than 1.
        k: Support size.
        c_norm: Normalizer C_{k,alpha}.
    """

    alpha: float
    k: int
    c_norm: float = field(init=False)

    def __post_init__(self) -> None:
        if not (isinstance(self.alpha, (int, float)) and math.isfinite(self.alpha)):
            raise ValidationError("alpha must be a finite number", {"alpha": self.alpha})
        if self.alpha <= 1.0:
            raise ValidationError("Zipf power must satisfy alpha > 1", {"alpha": self.alpha})
        validate_positive_int(self.k, "k")
        object.__setattr__(self, "c_norm", zipf_normalizer(float(self.alpha), int(self.k)))

    def distribution(self) -> Distribution:
        """Normalized vector p_i = i^-alpha / C_{k,alpha} (already sorted)."""
        weights = [i ** (-self.alpha) / self.c_norm for i in range(1, self.k + 1)]
        total = math.fsum(weights)
        return Distribution(tuple(w / total for w in weights))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "zipf", "alpha": repr(float(self.alpha)), "k": self.k}


def zipf_distribution(alpha: float, k: int) -> Distribution:
    """Build zipf(alpha, k).

    Args:
        alpha: Power, must be > 1.
        k: Support size, must be >= 1.

    Returns:
        The normalized power-law Distribution.

    Raises:
        ValidationError: If alpha <= 1 or k < 1.

    Example:
        >>> zipf_distribution(2.0, 2).probs
        (0.8, 0.2)
    """
    dist = ZipfClass(alpha, k).distribution()
    logger.debug(f"Built zipf({alpha}, {k})")
    return dist


def random_dirichlet_distribution(
    k: int, rng: np.random.Generator, concentration: Optional[float] = None
) -> Distribution:
    """Draw a distribution from a symmetric Dirichlet prior.

    ``concentration`` defaults to ``lab.dirichlet_concentration``.
    """
    k = validate_positive_int(k, "k")
    concentration = lab_float(concentration, "lab.dirichlet_concentration", 1.0)
    draw = rng.dirichlet(np.full(k, concentration))
    draw = draw / draw.sum()
    return Distribution(tuple(float(x) for x in draw))
