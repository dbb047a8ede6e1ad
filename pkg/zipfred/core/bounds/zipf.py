"""Closed-form bounds for Zipf permutation classes and power-law envelopes."""

from dataclasses import dataclass
from typing import Any, Dict
import logging
import math

import numpy as np

from ..combinatorics import binomial
from ..exceptions import InfeasibleInstanceError, ValidationError
from ..models import zipf_normalizer
from ..utils import LOG2_E, log2_int, validate_positive_int
from .distinct import LOG2_PI_E, clamp_distinct
from .report import BoundReport

logger = logging.getLogger(__name__)

SMALL_LAMBDA = 0.7


def _check_alpha(alpha: float) -> float:
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha)) or alpha <= 1.0:
        raise ValidationError("Zipf power must satisfy alpha > 1", {"alpha": alpha})
    return float(alpha)


def worst_case_lower_bound_zipf(alpha: float, k: int, n: int) -> BoundReport:
    """Worst-case redundancy lower bound n log((k - n) / (n^alpha C_{k,alpha})).

    Raises:
        InfeasibleInstanceError: If n > k^{1/alpha} or k <= n.
    """
    alpha = _check_alpha(alpha)
    k = validate_positive_int(k, "k")
    n = validate_positive_int(n, "n")
    if n**alpha > k * (1.0 + 1e-12):
        raise InfeasibleInstanceError(
            "Requires n <= k^(1/alpha)", {"alpha": alpha, "k": k, "n": n}
        )
    if k <= n:
        raise InfeasibleInstanceError("Requires k > n", {"k": k, "n": n})
    c_norm = zipf_normalizer(alpha, k)
    terms = {
        "n_log2_k_minus_n": n * math.log2(k - n),
        "minus_alpha_n_log2_n": -alpha * n * math.log2(n),
        "minus_n_log2_C": -n * math.log2(c_norm),
    }
    return BoundReport.from_terms(
        "worst_case_lower_bound_zipf",
        terms,
        {"alpha": alpha, "k": k, "n": n},
        "R_hat(P_(zipf(alpha,k))^n) >= n log((k-n)/(n^alpha C_{k,alpha}))",
        constants={"C_k_alpha": c_norm},
    )


def zipf_small_lambda_sums(alpha: float, k: int, n: int) -> BoundReport:
    """Sums over the symbols with lambda_i = n p_i < 0.7 for zipf(alpha, k).

    The value is the exact small-lambda penalty
    sum (3 lambda_i - lambda_i log2 lambda_i). ``notes`` carries the exact
    n^- and -lambda log lambda sums next to their closed-form
    approximations: X = (10n / (7C))^{1/alpha}, n^- ~ 0.7 X / (alpha - 1),
    the verbatim chain (11.2 alpha - 4.2) / (10 (alpha - 1)^2) X + 0.7 log2 X^alpha
    and its base-2 form with the log2(e) factor of the integral restored.

    Raises:
        InfeasibleInstanceError: If k does not exceed the threshold index floor(X).
    """
    alpha = _check_alpha(alpha)
    k = validate_positive_int(k, "k")
    n = validate_positive_int(n, "n")
    c_norm = zipf_normalizer(alpha, k)
    scale = 10.0 * n / (7.0 * c_norm)
    x = scale ** (1.0 / alpha)
    threshold_index = int(math.floor(x))
    if k <= threshold_index:
        raise InfeasibleInstanceError(
            "No symbol has lambda below the threshold",
            {"k": k, "threshold_index": threshold_index},
        )

    lam = n * np.arange(1, k + 1, dtype=float) ** (-alpha) / c_norm
    small = lam[lam < SMALL_LAMBDA]
    n_minus = math.fsum(small.tolist())
    neg_log = math.fsum((-small * np.log2(small)).tolist())

    n_minus_approx = SMALL_LAMBDA / (alpha - 1.0) * x
    log_tail = SMALL_LAMBDA * math.log2(scale)
    chain_literal = (11.2 * alpha - 4.2) / (10.0 * (alpha - 1.0) ** 2) * x + log_tail
    chain_base2 = (
        SMALL_LAMBDA * math.log2(10.0 / 7.0) / (alpha - 1.0)
        + SMALL_LAMBDA * alpha * LOG2_E / (alpha - 1.0) ** 2
    ) * x + log_tail

    terms = {"three_n_minus": 3.0 * n_minus, "neg_lambda_log2_lambda": neg_log}
    notes: Dict[str, Any] = {
        "threshold_index": threshold_index,
        "small_lambda_count": int(small.size),
        "n_minus_exact": n_minus,
        "n_minus_approx": n_minus_approx,
        "n_minus_ratio": n_minus / n_minus_approx,
        "neg_log_exact": neg_log,
        "neg_log_chain_literal": chain_literal,
        "neg_log_chain_base2": chain_base2,
        "neg_log_chain_ratio": neg_log / chain_literal,
    }
    return BoundReport.from_terms(
        "zipf_small_lambda_sums",
        terms,
        {"alpha": alpha, "k": k, "n": n},
        "n^- = sum_{lambda_i<0.7} lambda_i ~ (7/(10(alpha-1))) (10n/(7C_{k,alpha}))^{1/alpha}",
        constants={"C_k_alpha": c_norm, "X": x},
        notes=notes,
    )


@dataclass(frozen=True)
class ZipfTheoremReport:
    """Upper and lower expected-redundancy bounds for E_(c i^-alpha, k)^n.

    Attributes:
        upper_report: Breakdown of the upper bound.
        lower_report: Breakdown of the lower bound.
        constants: c_1, c_1', c_2, C_{k,alpha}.
    """

    upper_report: BoundReport
    lower_report: BoundReport
    constants: Dict[str, float]

    @property
    def upper(self) -> float:
        return self.upper_report.value

    @property
    def lower(self) -> float:
        return self.lower_report.value

    @property
    def theta_ratio(self) -> float:
        """upper / (n^{1/alpha} log2 k), the quantity held bounded by the Theta claim."""
        params = self.upper_report.params
        return self.upper / (params["n"] ** (1.0 / params["alpha"]) * math.log2(params["k"]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "upper": self.upper_report.to_dict(),
            "lower": self.lower_report.to_dict(),
            "constants": dict(self.constants),
            "theta_ratio": self.theta_ratio,
        }


def zipf_theorem_bounds(alpha: float, c: float, k: int, n: int) -> ZipfTheoremReport:
    """Evaluate both sides of the Theta(n^{1/alpha} log k) statement.

    upper = log C(k, c_1 n^{1/alpha}) + c_1 (2 - 1/alpha + 2 log e) n^{1/alpha} log(n / c_1) + log(n + 1)
    lower = log C(k, c_1' n^{1/alpha}) - c_1' (1 - 1/alpha) n^{1/alpha} log(n / c_1')
            - c_2 n^{1/alpha} - 0.7 log(10n / (7C))

    Binomial arguments are rounded to the nearest integer in [1, k].

    Raises:
        InfeasibleInstanceError: If k <= n.
    """
    alpha = _check_alpha(alpha)
    if not c > 0.0:
        raise ValidationError("Envelope constant must be positive", {"c": c})
    k = validate_positive_int(k, "k")
    n = validate_positive_int(n, "n")
    if k <= n:
        raise InfeasibleInstanceError("Requires k > n", {"k": k, "n": n})

    c_norm = zipf_normalizer(alpha, k)
    root = n ** (1.0 / alpha)
    c1 = c ** (-1.0 / alpha) + c * c / (alpha - 1.0)
    c1_prime = c_norm ** (1.0 / alpha) + c_norm ** (-2.0) / (alpha - 1.0)
    c2 = (32.2 * alpha - 25.2) / (10.0 * (alpha - 1.0) ** 2) * (
        10.0 / (7.0 * c_norm)
    ) - c1_prime * LOG2_PI_E
    constants = {"C_k_alpha": c_norm, "c1": c1, "c1_prime": c1_prime, "c2": c2}
    params = {"alpha": alpha, "c": c, "k": k, "n": n}

    d_upper = clamp_distinct(c1 * root, k)
    upper = BoundReport.from_terms(
        "zipf_theorem_upper",
        {
            "log2_binom_k_c1_root": log2_int(binomial(k, d_upper)),
            "c1_root_log2_n_over_c1": c1 * (2.0 - 1.0 / alpha + 2.0 * LOG2_E) * root
            * math.log2(n / c1),
            "log2_n_plus_1": math.log2(n + 1),
        },
        params,
        "R_bar(E_(ci^-alpha,k)^n) <= log C(k, c1 n^{1/alpha})"
        " + c1(2 - 1/alpha + 2 log e) n^{1/alpha} log(n/c1) + log(n+1)",
        constants=constants,
        notes={"d_raw": c1 * root, "d_clamped": d_upper},
    )

    d_lower = clamp_distinct(c1_prime * root, k)
    lower = BoundReport.from_terms(
        "zipf_theorem_lower",
        {
            "log2_binom_k_c1p_root": log2_int(binomial(k, d_lower)),
            "minus_c1p_root_log2_n_over_c1p": -c1_prime * (1.0 - 1.0 / alpha) * root
            * math.log2(n / c1_prime),
            "minus_c2_root": -c2 * root,
            "minus_small_lambda_log": -SMALL_LAMBDA * math.log2(10.0 * n / (7.0 * c_norm)),
        },
        params,
        "R_bar(E_(ci^-alpha,k)^n) >= (log C(k, c1' n^{1/alpha}) - c1'(1 - 1/alpha) n^{1/alpha}"
        " log(n/c1'))(1 + o_n(1)) - c2 n^{1/alpha} - (7/10) log(10n/(7C_{k,alpha}))",
        constants=constants,
        notes={"d_raw": c1_prime * root, "d_clamped": d_lower, "asymptotic_factor": 1.0},
    )
    logger.debug(f"zipf bounds alpha={alpha} c={c} k={k} n={n}: [{lower.value}, {upper.value}]")
    return ZipfTheoremReport(upper_report=upper, lower_report=lower, constants=constants)
