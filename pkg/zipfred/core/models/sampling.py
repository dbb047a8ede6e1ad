"""Random sequence and count generation for Monte Carlo checks and
synthetic streams."""

import numpy as np

from ..utils import validate_positive_int
from .distribution import Distribution


def sample_sequence(p: Distribution, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n i.i.d. symbols from p as 1-based indices."""
    n = validate_positive_int(n, "n")
    return rng.choice(p.k, size=n, p=p.array) + 1


def sample_poisson_counts(
    p: Distribution, n: int, rng: np.random.Generator, trials: int = 1
) -> np.ndarray:
    """Draw per-symbol counts under Poisson(n) sampling.

    Each row holds independent Poisson(n * p_i) multiplicities.

    Returns:
        Integer array of shape (trials, k).
    """
    n = validate_positive_int(n, "n")
    trials = validate_positive_int(trials, "trials")
    return rng.poisson(n * p.array, size=(trials, p.k))
