"""Shtarkov-sum bracket for unordered envelope classes E_(f)."""

from typing import List, Optional
import logging
import math

import numpy as np
from scipy.special import xlogy

from ..combinatorics import check_type_budget, iter_sorted_patterns, pattern_sequence_count
from ..exceptions import InfeasibleInstanceError
from ..models import EnvelopeClass
from ..utils import LN2, lab_int, log2_int, logsumexp2, validate_positive_int
from .permutation import log2_factorial, shtarkov_sum_permutation_class
from .report import ShtarkovReport

logger = logging.getLogger(__name__)


def _log2_envelope_upper(env: EnvelopeClass, n: int) -> float:
    envelope = np.asarray(env.envelope, dtype=float)
    log_terms: List[float] = []
    for pattern in iter_sorted_patterns(n, env.k):
        mu = np.asarray(pattern, dtype=float)
        log_env = float(np.sum(xlogy(mu, envelope[: len(pattern)])) / LN2)
        log_ml = float(np.sum(xlogy(mu, mu / n)) / LN2)
        log_p_hat = min(log_env, log_ml)
        if log_p_hat == -math.inf:
            continue
        log_terms.append(log2_int(pattern_sequence_count(pattern, env.k)) + log_p_hat)
    return logsumexp2(log_terms)


def shtarkov_sum_envelope_class(
    env: EnvelopeClass, n: int, max_types: Optional[int] = None
) -> ShtarkovReport:
    """Bracket log2 S(E_(f)^n).

    lower: the largest permutation-class sum among the explicit members
    (greedy fill, normalized envelope, uniform) that fit under f.
    upper: sum over sorted types of the sequence count times
    min(prod f(i)^{mu_(i)}, prod (mu_i/n)^{mu_i}).

    ``log_sum`` carries the upper end.

    Raises:
        InfeasibleInstanceError: If no distribution fits under the envelope.
        InstanceTooLargeError: If the number of types exceeds the guard.
    """
    n = validate_positive_int(n, "n")
    max_types = lab_int(max_types, "lab.max_types", 10_000_000)
    check_type_budget(n, env.k, max_types)

    candidates = env.candidate_members()
    if not candidates:
        raise InfeasibleInstanceError(
            "Envelope class is empty", {"envelope_mass": math.fsum(env.envelope)}
        )
    lower = max(
        shtarkov_sum_permutation_class(member, n, max_types=max_types).log_sum
        for member in candidates
    )
    upper = max(_log2_envelope_upper(env, n), lower)

    logger.info(f"log2 S(E_(f)^{n}) in [{lower:.6f}, {upper:.6f}] (k={env.k})")
    return ShtarkovReport(
        log_sum=upper,
        class_description=env.to_dict(),
        n=n,
        method="profile_grouped",
        upper_bound_logkfact=log2_factorial(env.k),
        lower_log_sum=lower,
        upper_log_sum=upper,
    )
