"""Bounds on expected redundancy in terms of the expected number of
distinct symbols, and the distinct-count bound for power-law envelopes."""

from typing import Sequence, Tuple
import logging
import math

import numpy as np

from ..combinatorics import binomial
from ..exceptions import ValidationError
from ..utils import LOG2_E, log2_int, validate_positive_int
from .report import BoundReport

logger = logging.getLogger(__name__)

LOG2_PI_E = math.log2(math.pi * math.e)


def clamp_distinct(d: float, upper: int) -> int:
    """Round a real-valued distinct count to the nearest integer in [1, upper]."""
    return int(min(max(round(d), 1), upper))


def _check_d(k: int, n: int, d: float) -> Tuple[int, int]:
    k = validate_positive_int(k, "k")
    n = validate_positive_int(n, "n")
    if not 0 < d <= min(n, k):
        raise ValidationError("d must satisfy 0 < d <= min(n, k)", {"d": d, "n": n, "k": k})
    return k, n


def distinct_upper_bound(k: int, n: int, d: float) -> BoundReport:
    """Upper bound d log(kn/d^2) + (2 log e + 1) d + log(n + 1).

    Raises:
        ValidationError: If d is not in (0, min(n, k)].

    Example:
        >>> round(distinct_upper_bound(8, 8, 2).terms["d_log2_kn_over_d2"], 6)
        8.0
    """
    k, n = _check_d(k, n, d)
    terms = {
        "d_log2_kn_over_d2": d * math.log2(k * n / (d * d)),
        "two_log2e_plus_1_times_d": (2.0 * LOG2_E + 1.0) * d,
        "log2_n_plus_1": math.log2(n + 1),
    }
    return BoundReport.from_terms(
        "distinct_upper_bound",
        terms,
        {"k": k, "n": n, "d": d},
        "R_bar(P_d^n) <= d log(kn/d^2) + (2 log e + 1) d + log(n+1)",
    )


def distinct_upper_bound_binomial_form(k: int, n: int, d: float) -> BoundReport:
    """Intermediate form log n + log C(k, d) + log C(n-1, d-1) of the same bound.

    A real d is rounded to the nearest integer and clamped to [1, min(n, k)].
    """
    k, n = _check_d(k, n, d)
    d_int = clamp_distinct(d, min(n, k))
    terms = {
        "log2_n": math.log2(n),
        "log2_binom_k_d": log2_int(binomial(k, d_int)),
        "log2_binom_n1_d1": log2_int(binomial(n - 1, d_int - 1)),
    }
    return BoundReport.from_terms(
        "distinct_upper_bound_binomial_form",
        terms,
        {"k": k, "n": n, "d": d},
        "R_bar(P_d^n) <= log n + log C(k,d) + log C(n-1,d-1)",
        notes={"d_raw": d, "d_clamped": d_int},
    )


def small_lambda_penalty(lambdas: Sequence[float], threshold: float = 0.7) -> float:
    """Sum over lambda_i < threshold of 3 lambda_i - lambda_i log2 lambda_i."""
    lam = np.asarray(lambdas, dtype=float)
    small = lam[(lam > 0.0) & (lam < threshold)]
    return math.fsum((3.0 * small - small * np.log2(small)).tolist())


def distinct_lower_bound(
    k: int, n: int, d: float, lambdas: Sequence[float], threshold: float = 0.7
) -> BoundReport:
    """Lower bound log C(k,d) - d log(n/d + 1/6) - d log(pi e) - small-lambda penalty.

    The (1 + o_d(1)) factor of the leading bracket is taken as 1 and
    recorded in ``notes``; at desk scale the result is a margin, not a
    guarantee.

    Args:
        k: Alphabet size.
        n: Sample size.
        d: Expected number of distinct symbols (rounded and clamped to
            [1, k] inside the binomial).
        lambdas: n p_i for the representative member.
        threshold: Small-lambda cutoff.
    """
    k = validate_positive_int(k, "k")
    n = validate_positive_int(n, "n")
    if not 0 < d <= k:
        raise ValidationError("d must satisfy 0 < d <= k", {"d": d, "k": k})
    d_int = clamp_distinct(d, k)
    terms = {
        "log2_binom_k_d": log2_int(binomial(k, d_int)),
        "minus_d_log2_n_over_d_plus_sixth": -d * math.log2(n / d + 1.0 / 6.0),
        "minus_d_log2_pi_e": -d * LOG2_PI_E,
        "minus_small_lambda_penalty": -small_lambda_penalty(lambdas, threshold),
    }
    return BoundReport.from_terms(
        "distinct_lower_bound",
        terms,
        {"k": k, "n": n, "d": d},
        "R_bar(P_d^n) >= (log C(k,d) - d log(n/d + 1/6) - d log(pi e))(1 + o_d(1))"
        " - sum_{lambda_i < 0.7} (3 lambda_i - lambda_i log lambda_i)",
        notes={"d_raw": d, "d_clamped": d_int, "asymptotic_factor": 1.0},
    )


def envelope_distinct_bound(alpha: float, c: float, k: int, n: int) -> BoundReport:
    """Distinct-count bound (c^{-1/alpha} + c^2 / (alpha - 1)) n^{1/alpha} for E_(c i^-alpha).

    The exact head count #{i : f(i) >= 1/n} and tail mass sum_{f(i) < 1/n} n f(i)
    over the k symbols are reported in ``notes``.
    """
    if alpha <= 1.0 or c <= 0.0:
        raise ValidationError("Needs alpha > 1 and c > 0", {"alpha": alpha, "c": c})
    k = validate_positive_int(k, "k")
    n = validate_positive_int(n, "n")
    root = n ** (1.0 / alpha)
    terms = {
        "head_count": c ** (-1.0 / alpha) * root,
        "tail_mass": c * c / (alpha - 1.0) * root,
    }
    envelope = c * np.arange(1, k + 1, dtype=float) ** (-alpha)
    head = envelope >= 1.0 / n
    return BoundReport.from_terms(
        "envelope_distinct_bound",
        terms,
        {"alpha": alpha, "c": c, "k": k, "n": n},
        "d <= (1/c^{1/alpha} + c^2/(alpha-1)) n^{1/alpha}",
        notes={
            "head_count_exact": int(head.sum()),
            "tail_mass_exact": math.fsum((n * envelope[~head]).tolist()),
        },
    )
