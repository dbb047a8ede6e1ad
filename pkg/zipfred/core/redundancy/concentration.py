"""Monte Carlo checks of distinct-count concentration under Poisson sampling.

Trials are split into fixed-size chunks, each with its own generator spawned
from the seed, and only integer tallies are combined, so the estimate does
not depend on the order in which chunks run.
"""

from typing import Optional
import logging
import math

import numpy as np

from ..exceptions import ValidationError
from ..models import Distribution, expected_distinct, poisson_occupancy, sample_poisson_counts
from ..utils import lab_int, spawn_rngs, validate_positive_int
from .reports import CheckReport

logger = logging.getLogger(__name__)

MIN_TRIALS = 10_000
CHUNK_TRIALS = 10_000


def _tail_frequency(
    p: Distribution, n: int, below: float, trials: int, seed: int
) -> float:
    """Fraction of Poisson(n) samples whose distinct count is strictly below ``below``."""
    chunks = math.ceil(trials / CHUNK_TRIALS)
    hits = 0
    for index, rng in enumerate(spawn_rngs(seed, chunks)):
        size = min(CHUNK_TRIALS, trials - index * CHUNK_TRIALS)
        counts = sample_poisson_counts(p, n, rng, size)
        distinct = (counts > 0).sum(axis=1)
        hits += int(np.count_nonzero(distinct < below))
    return hits / trials


def _tail_report(
    claim: str,
    anchor: str,
    frequency: float,
    bound: float,
    trials: int,
    details: dict,
) -> CheckReport:
    standard_error = math.sqrt(bound * (1.0 - bound) / trials)
    allowed = bound + 3.0 * standard_error
    return CheckReport(
        claim=claim,
        anchor=anchor,
        passed=frequency <= allowed,
        measured=frequency,
        bound=bound,
        margin=allowed - frequency,
        details={**details, "trials": trials, "standard_error": standard_error},
    )


def _resolve_trials(trials: Optional[int]) -> int:
    trials = validate_positive_int(lab_int(trials, "lab.trials", 100_000), "trials")
    if trials < MIN_TRIALS:
        raise ValidationError("Monte Carlo checks need at least 10^4 trials", {"trials": trials})
    return trials


def concentration_check(
    p: Distribution,
    n: int,
    s: float,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> CheckReport:
    """Pr[phi_+ < d^{poi(n)} - sqrt(2 v s)] <= e^{-s} by simulation.

    Passes when the empirical frequency is at most e^{-s} plus three
    binomial standard errors.
    """
    n = validate_positive_int(n, "n")
    if not s > 0.0:
        raise ValidationError("s must be positive", {"s": s})
    trials = _resolve_trials(trials)
    seed = lab_int(seed, "lab.seed", 0xC0FFEE)

    occupancy = poisson_occupancy(p, n)
    below = occupancy.distinct - math.sqrt(2.0 * occupancy.singletons * s)
    frequency = _tail_frequency(p, n, below, trials, seed)
    logger.info(f"concentration n={n} s={s}: frequency {frequency:.5f} vs e^-s={math.exp(-s):.5f}")
    return _tail_report(
        "poisson_distinct_concentration",
        "Pr[phi_+^{poi(n)} < d^{poi(n)} - sqrt(2vs)] <= e^{-s}",
        frequency,
        math.exp(-s),
        trials,
        {"n": n, "s": s, "seed": seed, "threshold": below, **occupancy.to_dict()},
    )


def distinct_count_tail_check(
    p: Distribution,
    n: int,
    eps: float,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> CheckReport:
    """Pr[phi_+^{poi(n)} < (1 - eps) d] <= exp(-d (eps - 2/n)^2 / 2) by simulation.

    Raises:
        ValidationError: Unless 2/n < eps < 1.
    """
    n = validate_positive_int(n, "n")
    if not 2.0 / n < eps < 1.0:
        raise ValidationError("eps must lie in (2/n, 1)", {"eps": eps, "n": n})
    trials = _resolve_trials(trials)
    seed = lab_int(seed, "lab.seed", 0xC0FFEE)

    d = expected_distinct(p, n)
    below = (1.0 - eps) * d
    bound = math.exp(-d * (eps - 2.0 / n) ** 2 / 2.0)
    frequency = _tail_frequency(p, n, below, trials, seed)
    return _tail_report(
        "distinct_count_lower_tail",
        "Pr[phi_+^{poi(n)} < (1-eps) d] <= exp(-d (eps - 2/n)^2 / 2)",
        frequency,
        bound,
        trials,
        {"n": n, "eps": eps, "seed": seed, "d": d, "threshold": below},
    )
