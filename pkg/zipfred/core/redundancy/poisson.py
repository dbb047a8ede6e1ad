"""Entropy of Poisson variables and of type vectors under Poisson sampling."""

from typing import Optional
import logging
import math

import numpy as np
from scipy.stats import poisson

from ..exceptions import ValidationError
from ..models import Distribution
from ..utils import LOG2_E, lab_float, validate_positive_int
from .reports import PoissonEntropyReport

logger = logging.getLogger(__name__)


def poisson_entropy(lam: float, tail_mass: Optional[float] = None) -> float:
    """H(poi(lam)) in bits by truncated summation.

    Terms are summed up to the first index whose upper tail mass falls
    below ``tail_mass`` (default ``poisson.entropy_tail_mass``).

    Raises:
        ValidationError: If lam <= 0.
    """
    if not (math.isfinite(lam) and lam > 0.0):
        raise ValidationError("Poisson mean must be positive", {"lambda": lam})
    tail_mass = lab_float(tail_mass, "poisson.entropy_tail_mass", 1e-15)
    start = poisson.isf(tail_mass, lam)
    top = max(int(start) if np.isfinite(start) else int(lam) + 1, 1)
    while poisson.sf(top, lam) >= tail_mass:
        top += 1
    support = np.arange(top + 1)
    log_pmf = poisson.logpmf(support, lam)
    pmf = np.exp(log_pmf)
    return -math.fsum((pmf * log_pmf).tolist()) * LOG2_E


def poisson_entropy_bound(lam: float) -> float:
    """Upper bound lam (log2 e - log2 lam) + e^{-lam} lam^2 / (1 - lam) on H(poi(lam)).

    Raises:
        ValidationError: Unless 0 < lam < 1.
    """
    if not 0.0 < lam < 1.0:
        raise ValidationError("Bound needs 0 < lambda < 1", {"lambda": lam})
    return lam * (LOG2_E - math.log2(lam)) + math.exp(-lam) * lam * lam / (1.0 - lam)


def small_lambda_cap(lam: float) -> float:
    """3 lam - lam log2 lam, the per-symbol entropy cap below the threshold."""
    return 3.0 * lam - lam * math.log2(lam)


def gaussian_cap(lam: float) -> float:
    """1/2 log2(2 pi e (lam + 1/12)), the per-symbol entropy cap above the threshold."""
    return 0.5 * math.log2(2.0 * math.pi * math.e * (lam + 1.0 / 12.0))


def type_entropy_poisson(
    p: Distribution, n: int, threshold: Optional[float] = None
) -> PoissonEntropyReport:
    """H(tau) = sum_i H(poi(n p_i)) split at the small-lambda threshold.

    Symbols with p_i = 0 contribute nothing.
    """
    n = validate_positive_int(n, "n")
    threshold = lab_float(threshold, "poisson.small_lambda_threshold", 0.7)
    lambdas = tuple(float(n * x) for x in p.probs)
    low, high, low_cap, high_cap = [], [], [], []
    for lam in lambdas:
        if lam <= 0.0:
            continue
        if lam < threshold:
            low.append(poisson_entropy(lam))
            low_cap.append(small_lambda_cap(lam))
        else:
            high.append(poisson_entropy(lam))
            high_cap.append(gaussian_cap(lam))
    report = PoissonEntropyReport(
        lambdas=lambdas,
        h_type=math.fsum(low + high),
        low_part=math.fsum(low),
        high_part=math.fsum(high),
        low_cap=math.fsum(low_cap),
        high_cap=math.fsum(high_cap),
        threshold=threshold,
    )
    logger.debug(f"H(tau) under poi({n}) = {report.h_type:.6f} bits (cap {report.cap:.6f})")
    return report
