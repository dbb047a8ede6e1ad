"""Utility functions for Zipfred.

Numeric helpers shared by the lab modules: tolerances, base-2 logarithms,
numerically careful powers, seeded random generators and validation.
"""

import math
from typing import Iterable, List, Optional, Sequence

import numpy as np
from scipy.special import logsumexp, xlogy

from .config import Config
from .exceptions import ValidationError

# Absolute tolerance for probability comparisons and class membership.
PROB_TOL = 1e-12

LOG2_E = math.log2(math.e)
LN2 = math.log(2.0)


# Logarithm utilities
def log2_safe(x: float) -> float:
    """Return log2(x), with log2(0) = -inf instead of an exception."""
    if x <= 0.0:
        return -math.inf
    return math.log2(x)


def log2_int(value: int) -> float:
    """Base-2 logarithm of a (possibly huge) positive integer.

    Args:
        value: Positive Python integer; may exceed the float range.

    Returns:
        log2(value) as a float.
    """
    if value <= 0:
        raise ValidationError("log2_int requires a positive integer", {"value": value})
    bits = value.bit_length()
    if bits <= 1000:
        return math.log2(value)
    shift = bits - 64
    return math.log2(value >> shift) + shift


def neg_xlog2x(values: np.ndarray) -> np.ndarray:
    """Elementwise -x*log2(x) with the 0*log(0) = 0 convention."""
    return -xlogy(values, values) / LN2


def logsumexp2(log2_terms: Iterable[float]) -> float:
    """Base-2 log-sum-exp: log2(sum(2**t)) without overflow.

    Args:
        log2_terms: Terms already expressed in bits.

    Returns:
        log2 of the sum, or -inf for an empty input.
    """
    arr = np.asarray(list(log2_terms), dtype=float)
    if arr.size == 0:
        return -math.inf
    return float(logsumexp(arr * LN2) / LN2)


def one_minus_pow(p: float, n: int) -> float:
    """Compute (1 - p)**n.

    For p < 0.5 this goes through exp(n*log1p(-p)) to avoid cancellation
    when n is large relative to p.
    """
    if p < 0.5:
        return math.exp(n * math.log1p(-p))
    return (1.0 - p) ** n


# Random utilities
def seeded_rng(seed: int) -> np.random.Generator:
    """Create a numpy Generator from an integer seed."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn_rngs(seed: int, count: int) -> List[np.random.Generator]:
    """Derive ``count`` independent generators from one seed.

    Partition ``i`` always receives the same stream, so Monte Carlo work can
    be split across workers and tallied in any order.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


# Validation utilities
def validate_positive_int(value: int, name: str) -> int:
    """Validate a strictly positive integer parameter."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise ValidationError(f"{name} must be a positive integer", {name: value})
    return int(value)


def validate_probability_vector(probs: Sequence[float]) -> np.ndarray:
    """Validate a probability vector.

    Args:
        probs: Candidate probabilities.

    Returns:
        The vector as a float numpy array.

    Raises:
        ValidationError: If the vector is empty, has negative or non-finite
            entries, or does not sum to one within PROB_TOL.
    """
    arr = np.asarray(probs, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValidationError("Probability vector must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("Probability vector has non-finite entries")
    if np.any(arr < -PROB_TOL):
        raise ValidationError("Probability vector has negative entries", {"min": float(arr.min())})
    total = math.fsum(arr.tolist())
    if abs(total - 1.0) > PROB_TOL:
        raise ValidationError("Probabilities must sum to 1", {"sum": total})
    return np.clip(arr, 0.0, None)


# Configuration utilities
def lab_int(value: Optional[int], key: str, default: int) -> int:
    """Return ``value``, or the configured integer at ``key`` when it is None."""
    if value is None:
        config = Config()
        value = config.get_int(key, default)
    return int(value)


def lab_float(value: Optional[float], key: str, default: float) -> float:
    """Return ``value``, or the configured number at ``key`` when it is None."""
    if value is None:
        config = Config()
        value = config.get_float(key, default)
    return float(value)
