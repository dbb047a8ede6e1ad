"""Shtarkov sums of permutation classes.

The maximum likelihood of x^n over all relabelings of p pairs the sorted
multiplicities of x^n with the sorted probabilities, so p_hat depends on
x^n only through its sorted type. The profile-grouped sum therefore runs
over integer partitions of n with at most k parts, weighting each by the
number of sequences that realize it.
"""

from itertools import product
from typing import List, Optional, Sequence
import logging
import math

import numpy as np
from scipy.special import logsumexp, xlogy

from ..bounds import worst_case_lower_bound_zipf
from ..combinatorics import (
    check_type_budget,
    iter_sorted_patterns,
    pattern_sequence_count,
)
from ..exceptions import InfeasibleInstanceError, InstanceTooLargeError, ValidationError
from ..models import Distribution, PermutationClass, TypeVector
from ..utils import LN2, lab_int, log2_int, logsumexp2, validate_positive_int
from .report import ShtarkovReport

logger = logging.getLogger(__name__)

# Guard for the naive evaluator: k^n sequences times members.
MAX_EXHAUSTIVE_CELLS = 10_000_000


def log2_factorial(k: int) -> float:
    """log2 k!, the worst-case redundancy cap of any permutation class."""
    return math.lgamma(k + 1) / LN2


def _log2_pattern_likelihood(pattern: Sequence[int], sorted_probs: Sequence[float]) -> float:
    mu = np.asarray(pattern, dtype=float)
    p = np.asarray(sorted_probs[: len(pattern)], dtype=float)
    return float(np.sum(xlogy(mu, p)) / LN2)


def max_likelihood_permutation(t: TypeVector, base: Distribution) -> float:
    """p_hat(x^n) = prod_i p_(i)^{mu_(i)} over every relabeling of ``base``.

    Raises:
        ValidationError: If t and base have different alphabet sizes.

    Example:
        >>> round(max_likelihood_permutation(TypeVector((2, 1), 3), Distribution((0.8, 0.2))), 3)
        0.128
    """
    if t.k != base.k:
        raise ValidationError("Type and base differ in alphabet size", {"type_k": t.k, "k": base.k})
    return 2.0 ** _log2_pattern_likelihood(t.sorted_mu, base.sorted_probs)


def shtarkov_sum_permutation_class(
    base: Distribution,
    n: int,
    alpha: Optional[float] = None,
    max_types: Optional[int] = None,
) -> ShtarkovReport:
    """log2 S(P_(p)^n) by profile grouping.

    Args:
        base: Any member of the class.
        n: Block length.
        alpha: Zipf power of the base, if it is zipf(alpha, k); fills the
            worst-case Zipf lower bound when n <= k^{1/alpha}.
        max_types: Desk-scale guard on the number of types; defaults to
            ``lab.max_types``.

    Raises:
        InstanceTooLargeError: If the number of types exceeds the guard.
    """
    n = validate_positive_int(n, "n")
    k = base.k
    check_type_budget(n, k, lab_int(max_types, "lab.max_types", 10_000_000))

    sorted_probs = base.sorted_probs
    log_terms: List[float] = []
    for pattern in iter_sorted_patterns(n, k):
        log_p_hat = _log2_pattern_likelihood(pattern, sorted_probs)
        if log_p_hat == -math.inf:
            continue
        log_terms.append(log2_int(pattern_sequence_count(pattern, k)) + log_p_hat)
    log_sum = logsumexp2(log_terms)

    zipf_bound = None
    if alpha is not None:
        try:
            zipf_bound = worst_case_lower_bound_zipf(alpha, k, n).value
        except InfeasibleInstanceError:
            logger.debug(f"Zipf lower bound does not apply at alpha={alpha} k={k} n={n}")

    logger.info(f"log2 S(P_(p)^{n}) = {log_sum:.6f} over {len(log_terms)} patterns (k={k})")
    return ShtarkovReport(
        log_sum=log_sum,
        class_description=PermutationClass(base).to_dict(),
        n=n,
        method="profile_grouped",
        zipf_lower_bound=zipf_bound,
        upper_bound_logkfact=log2_factorial(k),
    )


def shtarkov_sum_exhaustive(members: Sequence[Distribution], n: int) -> float:
    """Naive log2 sum over all k^n sequences of the max member likelihood.

    Args:
        members: Explicit class members over a common alphabet.
        n: Block length.

    Returns:
        log2 S in bits.

    Raises:
        InstanceTooLargeError: If k^n times the member count exceeds
            MAX_EXHAUSTIVE_CELLS.
    """
    n = validate_positive_int(n, "n")
    if not members:
        raise ValidationError("Class must have at least one member")
    k = members[0].k
    if any(m.k != k for m in members):
        raise ValidationError("Members differ in alphabet size")
    cells = k**n * len(members)
    if cells > MAX_EXHAUSTIVE_CELLS:
        raise InstanceTooLargeError(
            "Too many sequences for naive enumeration",
            {"k": k, "n": n, "members": len(members), "max_cells": MAX_EXHAUSTIVE_CELLS},
        )

    sequences = np.array(list(product(range(k), repeat=n)), dtype=np.int64).reshape(-1, n)
    with np.errstate(divide="ignore"):
        log_probs = np.log(np.array([m.array for m in members]))
    # (members, sequences) log-likelihoods
    log_lik = log_probs[:, sequences].sum(axis=2)
    best = log_lik.max(axis=0)
    finite = best[np.isfinite(best)]
    return float(logsumexp(finite) / LN2)


def shtarkov_sum_permutation_exhaustive(base: Distribution, n: int) -> ShtarkovReport:
    """Permutation-class Shtarkov sum by naive enumeration over explicit members."""
    members = PermutationClass(base).members()
    return ShtarkovReport(
        log_sum=shtarkov_sum_exhaustive(members, n),
        class_description=PermutationClass(base).to_dict(),
        n=n,
        method="exhaustive",
        upper_bound_logkfact=log2_factorial(base.k),
    )


def distinct_sequences_log_sum(base: Distribution, n: int) -> float:
    """log2 of the part of S(P_(p)^n) carried by sequences of n distinct symbols.

    Every such sequence has p_hat = p_(1) ... p_(n), and there are
    k (k-1) ... (k-n+1) of them.

    Raises:
        InfeasibleInstanceError: If n > k.
    """
    n = validate_positive_int(n, "n")
    k = base.k
    if n > k:
        raise InfeasibleInstanceError("Needs n <= k distinct symbols", {"n": n, "k": k})
    falling = math.fsum(math.log2(k - j) for j in range(n))
    return falling + _log2_pattern_likelihood((1,) * n, base.sorted_probs)
