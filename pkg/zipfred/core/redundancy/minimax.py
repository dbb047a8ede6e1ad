"""Minimax expected redundancy of finite classes.

The minimax expected redundancy of a finite class equals the capacity of
the channel from class members to observations, so it is computed with the
Blahut-Arimoto iteration on an explicit likelihood table. Three tables are
supported: all k^n sequences, all types of length n, and types of a
Poisson(n) number of samples (truncated, with one tail column).
"""

from itertools import product
from typing import List, Optional, Sequence
import logging
import math

import numpy as np
from scipy.special import gammaln, logsumexp, rel_entr, xlogy
from scipy.stats import poisson

from ..bounds import distinct_lower_bound
from ..combinatorics import binomial, check_type_budget, type_grid
from ..exceptions import ConvergenceError, InstanceTooLargeError, ValidationError
from ..models import Distribution, expected_distinct
from ..shtarkov import shtarkov_sum_exhaustive
from ..utils import LN2, lab_float, lab_int, validate_positive_int
from .reports import CheckReport, MinimaxResult

logger = logging.getLogger(__name__)

# Guard on members times outcomes of a likelihood table.
MAX_TABLE_CELLS = 10_000_000


def _check_members(members: Sequence[Distribution]) -> int:
    if not members:
        raise ValidationError("Class must have at least one member")
    k = members[0].k
    if any(m.k != k for m in members):
        raise ValidationError("Members differ in alphabet size")
    return k


def _check_cells(rows: int, columns: int) -> None:
    if rows * columns > MAX_TABLE_CELLS:
        raise InstanceTooLargeError(
            "Likelihood table too large",
            {"members": rows, "outcomes": columns, "max_cells": MAX_TABLE_CELLS},
        )


def capacity_oracle(
    channel: np.ndarray, tol: Optional[float] = None, max_iterations: Optional[int] = None
) -> MinimaxResult:
    """Blahut-Arimoto capacity of a row-stochastic channel, in bits.

    Args:
        channel: Array of shape (members, outcomes); each row sums to one.
        tol: Stop once max_m D(W_m || q) - I(r) <= tol; defaults to ``lab.tol``.
        max_iterations: Defaults to ``lab.max_iterations``.

    Returns:
        MinimaxResult with the max-divergence of the final mixture as value.

    Raises:
        ValidationError: If rows are not probability vectors or tol <= 0.
        ConvergenceError: If the gap stays above tol; details["residual"]
            holds the last gap.
    """
    tol = lab_float(tol, "lab.tol", 1e-7)
    max_iterations = lab_int(max_iterations, "lab.max_iterations", 100_000)
    if not tol > 0.0:
        raise ValidationError("Tolerance must be positive", {"tol": tol})
    w = np.asarray(channel, dtype=float)
    if w.ndim != 2 or w.shape[0] == 0 or np.any(w < 0.0):
        raise ValidationError("Channel must be a nonnegative 2-D table")
    row_sums = w.sum(axis=1)
    if np.any(np.abs(row_sums - 1.0) > 1e-9):
        raise ValidationError("Channel rows must sum to one", {"max_error": float(np.max(np.abs(row_sums - 1.0)))})

    members = w.shape[0]
    log_r = np.full(members, -math.log(members))
    gap = math.inf
    for iteration in range(1, max_iterations + 1):
        r = np.exp(log_r)
        q = r @ w
        divergence = rel_entr(w, q[np.newaxis, :]).sum(axis=1) / LN2
        value = float(divergence.max())
        info = float(r @ divergence)
        gap = value - info
        if gap <= tol:
            logger.debug(f"Capacity iteration converged after {iteration} steps, gap={gap:.3e}")
            return MinimaxResult(
                value=value,
                capacity_gap=max(gap, 0.0),
                prior=tuple(float(x) for x in r),
                iterations=iteration,
                outcomes=w.shape[1],
                mixture=q,
            )
        log_r = log_r + divergence * LN2
        log_r = log_r - logsumexp(log_r)

    raise ConvergenceError(
        "Capacity iteration did not reach tolerance",
        {"residual": gap, "tol": tol, "iterations": max_iterations},
    )


def sequence_channel(members: Sequence[Distribution], n: int) -> np.ndarray:
    """Likelihoods p_m(x^n) of every sequence, shape (members, k^n)."""
    n = validate_positive_int(n, "n")
    k = _check_members(members)
    _check_cells(len(members), k**n)
    sequences = np.array(list(product(range(k), repeat=n)), dtype=np.int64).reshape(-1, n)
    with np.errstate(divide="ignore"):
        log_probs = np.log(np.array([m.array for m in members]))
    return np.exp(log_probs[:, sequences].sum(axis=2))


def _type_log_likelihoods(members: Sequence[Distribution], grid: np.ndarray) -> np.ndarray:
    mu = grid.astype(float)
    length = float(mu.sum(axis=1)[0]) if mu.size else 0.0
    log_count = gammaln(length + 1) - gammaln(mu + 1).sum(axis=1)
    return np.array([log_count + xlogy(mu, m.array).sum(axis=1) for m in members])


def type_channel(
    members: Sequence[Distribution], n: int, max_types: Optional[int] = None
) -> np.ndarray:
    """Likelihoods of every type of length n, shape (members, types)."""
    n = validate_positive_int(n, "n")
    k = _check_members(members)
    types = check_type_budget(n, k, lab_int(max_types, "lab.max_types", 10_000_000))
    _check_cells(len(members), types)
    return np.exp(_type_log_likelihoods(members, type_grid(n, k)))


def poisson_truncation(
    n: int, truncation_mass: Optional[float] = None, truncation_sigmas: Optional[float] = None
) -> int:
    """Smallest length N with Pr[poi(n) > N] < truncation_mass.

    Raises:
        InstanceTooLargeError: If N exceeds n + truncation_sigmas sqrt(n).
    """
    mass = lab_float(truncation_mass, "poisson.truncation_mass", 1e-8)
    sigmas = lab_float(truncation_sigmas, "poisson.truncation_sigmas", 10.0)
    limit = n + sigmas * math.sqrt(n)
    length = int(n)
    while poisson.sf(length, n) >= mass:
        length += 1
        if length > limit:
            raise InstanceTooLargeError(
                "Poisson truncation exceeds the length limit",
                {"n": n, "mass": mass, "limit": limit},
            )
    return length


def poisson_type_channel(
    members: Sequence[Distribution],
    n: int,
    truncation_mass: Optional[float] = None,
    truncation_sigmas: Optional[float] = None,
    max_types: Optional[int] = None,
) -> np.ndarray:
    """Likelihoods of (length, type) pairs under Poisson(n) sampling.

    Lengths 0..N are covered exactly; the remaining mass Pr[poi(n) > N] is
    one shared column, identical for every member.
    """
    n = validate_positive_int(n, "n")
    k = _check_members(members)
    max_types = lab_int(max_types, "lab.max_types", 10_000_000)
    top = poisson_truncation(n, truncation_mass, truncation_sigmas)

    blocks: List[np.ndarray] = []
    total = 0
    for length in range(top + 1):
        total += check_type_budget(length, k, max_types)
        _check_cells(len(members), total)
        log_block = _type_log_likelihoods(members, type_grid(length, k))
        blocks.append(np.exp(log_block + poisson.logpmf(length, n)))
    tail = poisson.sf(top, n)
    blocks.append(np.full((len(members), 1), tail))
    logger.debug(f"Poisson table n={n}: lengths 0..{top}, tail mass {tail:.3e}")
    return np.hstack(blocks)


def minimax_expected_redundancy(
    members: Sequence[Distribution],
    n: int,
    tol: Optional[float] = None,
    outcomes: str = "sequence",
    max_iterations: Optional[int] = None,
) -> MinimaxResult:
    """Minimax expected redundancy min_q max_p E_p[log2 p/q] over a finite class.

    Args:
        members: Class members over a common alphabet.
        n: Block length.
        tol: Capacity-gap tolerance in bits.
        outcomes: "sequence" (all k^n sequences), "type" or "poisson".
        max_iterations: Iteration cap.

    Raises:
        ConvergenceError: If the iteration misses tol.
    """
    if outcomes == "sequence":
        channel = sequence_channel(members, n)
    elif outcomes == "type":
        channel = type_channel(members, n)
    elif outcomes == "poisson":
        channel = poisson_type_channel(members, n)
    else:
        raise ValidationError("Unknown outcome space", {"outcomes": outcomes})
    result = capacity_oracle(channel, tol, max_iterations)
    logger.info(
        f"minimax redundancy ({outcomes}) n={n} over {len(members)} members: {result.value:.9f}"
    )
    return result


def type_redundancy_equivalence_check(
    members: Sequence[Distribution], n: int, tol: Optional[float] = None
) -> CheckReport:
    """Sequence-level and type-level minimax redundancies agree within 2 tol."""
    tol = lab_float(tol, "lab.tol", 1e-7)
    by_sequence = minimax_expected_redundancy(members, n, tol, outcomes="sequence")
    by_type = minimax_expected_redundancy(members, n, tol, outcomes="type")
    difference = abs(by_sequence.value - by_type.value)
    return CheckReport(
        claim="type_redundancy_equivalence",
        anchor="R_bar(tau(P^n)) = R_bar(P^n)",
        passed=difference <= 2.0 * tol,
        measured=by_type.value,
        bound=by_sequence.value,
        margin=2.0 * tol - difference,
        details={"n": n, "members": len(members), "tol": tol},
    )


def lower_bound_poisson_halving_check(
    members: Sequence[Distribution], n: int, tol: Optional[float] = None
) -> CheckReport:
    """R_bar(P^n) >= R_bar(P^{poi(n)}) / 2 within tol."""
    tol = lab_float(tol, "lab.tol", 1e-7)
    fixed = minimax_expected_redundancy(members, n, tol, outcomes="type")
    poissonized = minimax_expected_redundancy(members, n, tol, outcomes="poisson")
    half = 0.5 * poissonized.value
    return CheckReport(
        claim="lower_bound_poisson_halving",
        anchor="R_bar(P^n) >= 1/2 R_bar(P^{poi(n)})",
        passed=fixed.value >= half - tol,
        measured=fixed.value,
        bound=half,
        margin=fixed.value - half,
        details={"n": n, "members": len(members), "tol": tol, "poisson_value": poissonized.value},
    )


def worst_case_cap_check(
    members: Sequence[Distribution], n: int, tol: Optional[float] = None
) -> CheckReport:
    """Expected minimax redundancy never exceeds log2 of the Shtarkov sum."""
    tol = lab_float(tol, "lab.tol", 1e-7)
    expected = minimax_expected_redundancy(members, n, tol, outcomes="sequence")
    worst = shtarkov_sum_exhaustive(members, n)
    return CheckReport(
        claim="expected_below_worst_case",
        anchor="R_bar(P^n) <= R_hat(P^n) = log S(P^n)",
        passed=expected.value <= worst + tol,
        measured=expected.value,
        bound=worst,
        margin=worst - expected.value,
        details={"n": n, "members": len(members), "tol": tol},
    )


def type_mass_cap_check(
    members: Sequence[Distribution], n: int, tol: Optional[float] = None
) -> CheckReport:
    """The witness mixture q on types satisfies q(tau) <= 1 / C(k, d') with d' nonzero entries.

    Holds for permutation-closed classes, where the optimal q is constant on
    types sharing a profile.
    """
    tol = lab_float(tol, "lab.tol", 1e-7)
    k = _check_members(members)
    result = minimax_expected_redundancy(members, n, tol, outcomes="type")
    grid = type_grid(n, k)
    distinct = (grid > 0).sum(axis=1)
    caps = np.array([1.0 / binomial(k, int(d)) for d in distinct])
    scaled = float(np.max(result.mixture / caps))
    return CheckReport(
        claim="type_mass_cap",
        anchor="q(tau^k) <= 1 / C(k, d')",
        passed=scaled <= 1.0 + 1e-9,
        measured=scaled,
        bound=1.0,
        margin=1.0 - scaled,
        details={"n": n, "members": len(members), "tol": tol},
    )


def distinct_lower_margin(
    members: Sequence[Distribution],
    n: int,
    tol: Optional[float] = None,
    threshold: Optional[float] = None,
) -> CheckReport:
    """Compare the type-level minimax value with the distinct-count lower bound.

    The bound drops its (1 + o_d(1)) factor, so the comparison is a margin
    report: a negative margin is logged, not raised.
    """
    threshold = lab_float(threshold, "poisson.small_lambda_threshold", 0.7)
    k = _check_members(members)
    result = minimax_expected_redundancy(members, n, tol, outcomes="type")
    representative = members[0]
    d = expected_distinct(representative, n)
    bound = distinct_lower_bound(k, n, d, (n * representative.array).tolist(), threshold)
    margin = result.value - bound.value
    if margin < 0:
        logger.warning(
            f"distinct lower bound exceeds minimax value by {-margin:.6f} bits (n={n}, k={k})"
        )
    return CheckReport(
        claim="distinct_lower_margin",
        anchor=bound.anchor,
        passed=margin >= 0.0,
        measured=result.value,
        bound=bound.value,
        margin=margin,
        asserted=False,
        details={"n": n, "k": k, "d": d, "terms": bound.terms},
    )
