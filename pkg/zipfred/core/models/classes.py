"""Distribution classes: unordered envelopes, permutation classes and the
classes bounded by an expected number of distinct symbols."""

from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, List, Optional, Tuple
import logging
import math

from ..exceptions import InstanceTooLargeError, ValidationError
from ..utils import PROB_TOL, validate_positive_int
from .distribution import Distribution, zipf_normalizer
from .statistics import expected_distinct

logger = logging.getLogger(__name__)

# k! members are materialized explicitly only up to this alphabet size.
MAX_PERMUTATION_MEMBERS_K = 8


@dataclass(frozen=True)
class EnvelopeClass:
    """Unordered envelope class E_(f): p_(i) <= f(i) for all i.

    Attributes:
        envelope: Nonincreasing nonnegative bounds f(1), ..., f(k).
    """

    envelope: Tuple[float, ...]

    def __post_init__(self) -> None:
        env = tuple(float(x) for x in self.envelope)
        if not env:
            raise ValidationError("Envelope must be non-empty")
        if any(x < 0 or not math.isfinite(x) for x in env):
            raise ValidationError("Envelope entries must be finite and nonnegative")
        if any(a < b - PROB_TOL for a, b in zip(env, env[1:])):
            raise ValidationError("Envelope must be nonincreasing")
        object.__setattr__(self, "envelope", env)

    @property
    def k(self) -> int:
        return len(self.envelope)

    @classmethod
    def power_law(cls, alpha: float, c: float, k: int) -> "EnvelopeClass":
        """Envelope f(i) = c * i^-alpha over k symbols."""
        if alpha <= 1.0 or c <= 0.0:
            raise ValidationError("Power-law envelope needs alpha > 1 and c > 0", {"alpha": alpha, "c": c})
        k = validate_positive_int(k, "k")
        return cls(tuple(c * i ** (-alpha) for i in range(1, k + 1)))

    @classmethod
    def from_distribution(cls, dist: Distribution) -> "EnvelopeClass":
        """Envelope equal to the sorted probabilities of ``dist``."""
        return cls(dist.sorted_probs)

    def contains(self, dist: Distribution, tol: float = PROB_TOL) -> bool:
        """Membership test: dist.sorted[i] <= f(i) for all i."""
        if dist.k != self.k:
            return False
        return all(p <= f + tol for p, f in zip(dist.sorted_probs, self.envelope))

    def is_empty(self) -> bool:
        """True when no distribution fits under the envelope (sum f < 1)."""
        return math.fsum(self.envelope) < 1.0 - PROB_TOL

    def greedy_member(self) -> Optional[Distribution]:
        """Fill mass from the top: p_(i) = min(f(i), remaining mass)."""
        if self.is_empty():
            return None
        remaining = 1.0
        probs: List[float] = []
        for bound in self.envelope:
            take = min(bound, max(remaining, 0.0))
            probs.append(take)
            remaining -= take
        total = math.fsum(probs)
        return Distribution(tuple(p / total for p in probs))

    def normalized_member(self) -> Optional[Distribution]:
        """f / sum(f), a member whenever sum(f) >= 1."""
        if self.is_empty():
            return None
        total = math.fsum(self.envelope)
        return Distribution(tuple(f / total for f in self.envelope))

    def candidate_members(self) -> List[Distribution]:
        """Distinct explicit members used to bracket class-level quantities."""
        candidates: List[Distribution] = []
        uniform = Distribution.uniform(self.k)
        for member in (self.greedy_member(), self.normalized_member(), uniform):
            if member is None or not self.contains(member):
                continue
            if not any(member.is_close(seen) for seen in candidates):
                candidates.append(member)
        return candidates

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "envelope", "k": self.k, "envelope": [repr(f) for f in self.envelope]}


@dataclass(frozen=True)
class PermutationClass:
    """P_(p): all relabelings of a base distribution."""

    base: Distribution

    @property
    def k(self) -> int:
        return self.base.k

    def contains(self, dist: Distribution, tol: float = PROB_TOL) -> bool:
        """Membership: sorted(dist) equals sorted(base) componentwise."""
        if dist.k != self.k:
            return False
        return all(abs(a - b) <= tol for a, b in zip(dist.sorted_probs, self.base.sorted_probs))

    def members(self) -> List[Distribution]:
        """All distinct relabelings of the base, in lexicographic permutation order.

        Raises:
            InstanceTooLargeError: If k exceeds MAX_PERMUTATION_MEMBERS_K.
        """
        if self.k > MAX_PERMUTATION_MEMBERS_K:
            raise InstanceTooLargeError(
                "Too many permutations to enumerate",
                {"k": self.k, "max_k": MAX_PERMUTATION_MEMBERS_K},
            )
        seen = set()
        result: List[Distribution] = []
        for perm in permutations(range(self.k)):
            probs = tuple(self.base.probs[j] for j in perm)
            if probs in seen:
                continue
            seen.add(probs)
            result.append(Distribution(probs))
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "permutation", "probs": [repr(p) for p in self.base.probs]}


@dataclass(frozen=True)
class DistinctBoundedClass:
    """P_d^n: distributions over [k] expecting at most d_max distinct symbols in n draws."""

    d_max: float
    k: int
    n: int

    def __post_init__(self) -> None:
        if not self.d_max > 0:
            raise ValidationError("d_max must be positive", {"d_max": self.d_max})
        validate_positive_int(self.k, "k")
        validate_positive_int(self.n, "n")

    def contains(self, dist: Distribution) -> bool:
        """Membership: expected_distinct(dist, n) <= d_max."""
        if dist.k != self.k:
            return False
        return expected_distinct(dist, self.n) <= self.d_max + PROB_TOL


def zipf_envelope_constant(alpha: float, k: int) -> float:
    """Smallest c such that zipf(alpha, k) lies in E_(c i^-alpha): c = 1 / C_{k,alpha}."""
    return 1.0 / zipf_normalizer(float(alpha), int(k))
