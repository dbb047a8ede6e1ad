"""Sequence statistics: types, profiles, and expected distinct-symbol counts
under fixed-length and Poisson sampling."""

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple
import logging
import math

import numpy as np

from ..exceptions import ValidationError
from ..utils import one_minus_pow, validate_positive_int
from .distribution import Distribution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypeVector:
    """Multiplicities mu_1, ..., mu_k of a length-n sequence over [k]."""

    mu: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        mu = tuple(int(m) for m in self.mu)
        if not mu:
            raise ValidationError("Type vector must cover at least one symbol")
        if any(m < 0 for m in mu):
            raise ValidationError("Multiplicities must be nonnegative", {"mu": mu})
        if sum(mu) != self.n:
            raise ValidationError("Multiplicities must sum to n", {"sum": sum(mu), "n": self.n})
        validate_positive_int(self.n, "n")
        object.__setattr__(self, "mu", mu)

    @property
    def k(self) -> int:
        return len(self.mu)

    @property
    def distinct_count(self) -> int:
        """phi_+: number of symbols with positive multiplicity."""
        return sum(1 for m in self.mu if m > 0)

    @property
    def support(self) -> Tuple[int, ...]:
        """0-based symbols that occur, ascending."""
        return tuple(i for i, m in enumerate(self.mu) if m > 0)

    @property
    def positive_parts(self) -> Tuple[int, ...]:
        """Multiplicities of occurring symbols, in symbol order."""
        return tuple(m for m in self.mu if m > 0)

    @property
    def sorted_mu(self) -> Tuple[int, ...]:
        """Multiplicities in nonincreasing order."""
        return tuple(sorted(self.mu, reverse=True))

    def empirical(self) -> np.ndarray:
        """Empirical distribution mu / n."""
        return np.asarray(self.mu, dtype=float) / self.n

    def to_dict(self) -> Dict[str, Any]:
        return {"mu": list(self.mu), "n": self.n}


@dataclass(frozen=True)
class Profile:
    """Prevalences phi_mu: how many symbols appear exactly mu times."""

    prevalences: Dict[int, int]
    n: int

    def __post_init__(self) -> None:
        if any(mu < 1 or count < 1 for mu, count in self.prevalences.items()):
            raise ValidationError("Prevalences must map mu >= 1 to positive counts")
        if sum(mu * count for mu, count in self.prevalences.items()) != self.n:
            raise ValidationError("Profile does not account for n samples", {"n": self.n})

    @property
    def distinct_count(self) -> int:
        """phi_+ = sum of all prevalences."""
        return sum(self.prevalences.values())

    def prevalence(self, mu: int) -> int:
        """phi_mu, zero for multiplicities that do not occur."""
        return self.prevalences.get(mu, 0)

    def to_dict(self) -> Dict[str, Any]:
        return {"prevalences": {str(m): c for m, c in sorted(self.prevalences.items())}, "n": self.n}


def type_of(sequence: Sequence[int], k: int) -> TypeVector:
    """Type of a sequence of 1-based symbol indices over [k].

    Args:
        sequence: Symbols, each in 1..k.
        k: Alphabet size.

    Returns:
        The TypeVector of multiplicities.

    Raises:
        ValidationError: On an empty sequence or an out-of-range symbol.

    Example:
        >>> type_of([2, 1, 3, 1, 3, 1], 4).mu   # "banana" over (a, b, n, x)
        (3, 1, 2, 0)
    """
    k = validate_positive_int(k, "k")
    if len(sequence) == 0:
        raise ValidationError("Sequence must be non-empty")
    counts = [0] * k
    for position, symbol in enumerate(sequence):
        if not 1 <= symbol <= k:
            raise ValidationError(
                "Symbol index out of range", {"position": position, "symbol": symbol, "k": k}
            )
        counts[symbol - 1] += 1
    return TypeVector(tuple(counts), len(sequence))


def profile_of(t: TypeVector) -> Profile:
    """Profile of a type: prevalences of every positive multiplicity."""
    counts = Counter(m for m in t.mu if m > 0)
    return Profile(dict(sorted(counts.items())), t.n)


def expected_distinct(p: Distribution, n: int) -> float:
    """E[phi_+^n] = sum_i 1 - (1 - p_i)^n under n i.i.d. draws."""
    n = validate_positive_int(n, "n")
    return math.fsum(1.0 - one_minus_pow(pi, n) for pi in p.probs)


@dataclass(frozen=True)
class PoissonOccupancy:
    """Occupancy statistics under Poisson(n) sampling.

    Attributes:
        distinct: d^{poi(n)} = sum 1 - exp(-lambda_i).
        singletons: v = E[phi_1] = sum lambda_i exp(-lambda_i).
        doubletons: E[phi_2] = sum lambda_i^2 exp(-lambda_i) / 2.
    """

    n: int
    distinct: float
    singletons: float
    doubletons: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "distinct": self.distinct,
            "singletons": self.singletons,
            "doubletons": self.doubletons,
        }


def poisson_occupancy(p: Distribution, n: int) -> PoissonOccupancy:
    """Compute d^{poi(n)}, E[phi_1^{poi(n)}] and E[phi_2^{poi(n)}]."""
    n = validate_positive_int(n, "n")
    lam = n * p.array
    decay = np.exp(-lam)
    return PoissonOccupancy(
        n=n,
        distinct=math.fsum((-np.expm1(-lam)).tolist()),
        singletons=math.fsum((lam * decay).tolist()),
        doubletons=math.fsum((lam * lam * decay / 2.0).tolist()),
    )


def expected_distinct_poisson(p: Distribution, n: int) -> float:
    """d^{poi(n)} = sum_i 1 - exp(-n p_i)."""
    return poisson_occupancy(p, n).distinct


def poissonization_gap_holds(p: Distribution, n: int) -> bool:
    """Check |d^{poi(n)} - d| < 2 E[phi_2^{poi(n)}] / n."""
    occupancy = poisson_occupancy(p, n)
    gap = abs(occupancy.distinct - expected_distinct(p, n))
    return gap < 2.0 * occupancy.doubletons / n
