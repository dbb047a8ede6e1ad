"""Cross-module verification suites behind ``zipfred verify``.

Every suite returns CheckReports; the command exits 1 when an asserted
check fails. Margin-only reports are included but never fail the run.
"""

from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Dict, List, Sequence
import logging
import math

import numpy as np

from ..core.bounds import (
    distinct_upper_bound,
    distinct_upper_bound_binomial_form,
    envelope_distinct_bound,
    worst_case_lower_bound_zipf,
    zipf_small_lambda_sums,
    zipf_theorem_bounds,
)
from ..core.codec import CodecParams, codeword_length, decode, encode, implied_log_prob
from ..core.combinatorics import iter_types, multinomial
from ..core.models import (
    Distribution,
    EnvelopeClass,
    PermutationClass,
    TypeVector,
    expected_distinct,
    poissonization_gap_holds,
    random_dirichlet_distribution,
    sample_sequence,
    type_of,
    zipf_distribution,
    zipf_envelope_constant,
)
from ..core.redundancy import (
    CheckReport,
    achieved_redundancy,
    concentration_check,
    distinct_count_tail_check,
    distinct_lower_margin,
    gaussian_cap,
    lower_bound_poisson_halving_check,
    minimax_expected_redundancy,
    poisson_entropy,
    poisson_entropy_bound,
    type_mass_cap_check,
    type_redundancy_equivalence_check,
    worst_case_cap_check,
)
from ..core.shtarkov import (
    log2_factorial,
    max_likelihood_permutation,
    shtarkov_sum_envelope_class,
    shtarkov_sum_exhaustive,
    shtarkov_sum_permutation_class,
)
from ..core.utils import seeded_rng
from .files import dumps_report, emit
from .run_config import RunConfig

logger = logging.getLogger(__name__)

RANDOM_CODEC_CASES = 10_000
ZIPF_ALPHAS = (1.5, 2.0, 3.0)


def _compare(
    claim: str, anchor: str, measured: float, bound: float, at_most: bool, slack: float = 0.0, **details
) -> CheckReport:
    margin = bound - measured if at_most else measured - bound
    return CheckReport(
        claim=claim,
        anchor=anchor,
        passed=margin >= -slack,
        measured=measured,
        bound=bound,
        margin=margin,
        details=details,
    )


def _exact_at_most(claim: str, anchor: str, measured: Fraction, bound: int) -> CheckReport:
    """Pass/fail decided on the rationals; the floats are for display."""
    return CheckReport(
        claim=claim,
        anchor=anchor,
        passed=measured <= bound,
        measured=float(measured),
        bound=float(bound),
        margin=float(bound - measured),
        details={"exact": str(measured)},
    )


def _failures(claim: str, anchor: str, failures: int, cases: int) -> CheckReport:
    return CheckReport(
        claim=claim,
        anchor=anchor,
        passed=failures == 0,
        measured=float(failures),
        bound=0.0,
        margin=float(-failures),
        details={"cases": cases},
    )


def _max_zipf_n(alpha: float, k: int) -> int:
    n = 1
    while (n + 1) ** alpha <= k * (1.0 + 1e-12):
        n += 1
    return n


def _tiny_classes() -> List[Dict]:
    point_masses = [Distribution((1.0, 0.0)), Distribution((0.0, 1.0))]
    pair = [Distribution((0.8, 0.2)), Distribution((0.2, 0.8))]
    return [
        {"name": "point_masses", "members": point_masses, "n": 2, "closed": True},
        {"name": "pair_n2", "members": pair, "n": 2, "closed": True},
        {"name": "pair_n3", "members": pair, "n": 3, "closed": True},
        {"name": "zipf_2_3", "members": PermutationClass(zipf_distribution(2.0, 3)).members(), "n": 2, "closed": True},
        {"name": "perm_532", "members": PermutationClass(Distribution((0.5, 0.3, 0.2))).members(), "n": 2, "closed": True},
        {"name": "single", "members": [Distribution((0.7, 0.3))], "n": 3, "closed": False},
    ]


# Codec
def codec_suite(run: RunConfig) -> List[CheckReport]:
    checks: List[CheckReport] = []

    failures = cases = length_failures = dominance_failures = 0
    worst_dominance = -math.inf
    for k, n in product(range(1, 5), range(1, 6)):
        params = CodecParams(k=k, n=n)
        for seq in product(range(1, k + 1), repeat=n):
            sequence = list(seq)
            bits = encode(sequence, params)
            cases += 1
            failures += decode(bits, params) != sequence
            t = type_of(sequence, k)
            length_failures += len(bits) != codeword_length(t, params)
            excess = len(bits) - implied_log_prob(t, params)
            worst_dominance = max(worst_dominance, excess)
            dominance_failures += excess > 4.0
    checks.append(_failures("codec_round_trip_exhaustive", "decode(encode(x)) = x, k <= 4, n <= 5", failures, cases))
    checks.append(_failures("codec_type_sufficiency", "|encode(x)| = codeword_length(type(x))", length_failures, cases))
    checks.append(
        _compare(
            "codec_dominance",
            "|encode(x)| <= -log q(x) + 4",
            worst_dominance,
            4.0,
            at_most=True,
            cases=cases,
        )
    )

    worst_kraft = Fraction(0)
    worst_q = Fraction(0)
    for k, n in product(range(1, 4), range(1, 5)):
        params = CodecParams(k=k, n=n)
        kraft = sum(
            Fraction(1, 2 ** len(encode(list(seq), params)))
            for seq in product(range(1, k + 1), repeat=n)
        )
        q_mass = Fraction(0)
        for mu in iter_types(n, k):
            t = TypeVector(mu, n)
            ml = Fraction(1)
            for m in t.positive_parts:
                ml *= Fraction(m, n) ** m
            q_mass += multinomial(mu) * ml / params.normalizer(t.distinct_count)
        worst_kraft = max(worst_kraft, kraft)
        worst_q = max(worst_q, q_mass)
    checks.append(_exact_at_most("codec_kraft", "sum_x 2^-|encode(x)| <= 1", worst_kraft, 1))
    checks.append(_exact_at_most("implied_q_subprobability", "sum_x q(x^n) <= 1", worst_q, 1))

    rng = seeded_rng(run.seed)
    failures = 0
    for _ in range(RANDOM_CODEC_CASES):
        k = int(rng.integers(1, 65))
        n = int(rng.integers(1, 257))
        p = random_dirichlet_distribution(k, rng)
        sequence = [int(s) for s in sample_sequence(p, n, rng)]
        params = CodecParams(k=k, n=n)
        failures += decode(encode(sequence, params), params) != sequence
    checks.append(_failures("codec_round_trip_random", "decode(encode(x)) = x, k <= 64, n <= 256", failures, RANDOM_CODEC_CASES))
    return checks


# Shtarkov
def shtarkov_suite(run: RunConfig) -> List[CheckReport]:
    checks: List[CheckReport] = []
    rng = seeded_rng(run.seed)

    worst_gap = 0.0
    for k, n in product(range(1, 5), range(1, 5)):
        for base in (zipf_distribution(2.0, k), random_dirichlet_distribution(k, rng)):
            grouped = shtarkov_sum_permutation_class(base, n).log_sum
            naive = shtarkov_sum_exhaustive(PermutationClass(base).members(), n)
            worst_gap = max(worst_gap, abs(grouped - naive))
    checks.append(_compare("shtarkov_grouping_exact", "profile-grouped S = naive S", worst_gap, 1e-10, True))

    mismatches = cases = 0
    for _ in range(20):
        k = int(rng.integers(2, 6))
        base = random_dirichlet_distribution(k, rng)
        for n in range(1, 5):
            for mu in iter_types(n, k):
                brute = max(
                    math.prod(base.probs[perm[i]] ** mu[i] for i in range(k))
                    for perm in permutations(range(k))
                )
                fast = max_likelihood_permutation(TypeVector(mu, n), base)
                cases += 1
                mismatches += abs(fast - brute) > 1e-12 * max(brute, 1e-300)
    checks.append(_failures("rearrangement_ml", "p_hat pairs sorted mu with sorted p", mismatches, cases))

    for alpha, k in product(ZIPF_ALPHAS, (8, 16)):
        base = zipf_distribution(alpha, k)
        previous = -math.inf
        for n in range(1, _max_zipf_n(alpha, k) + 1):
            report = shtarkov_sum_permutation_class(base, n, alpha=alpha)
            bound = worst_case_lower_bound_zipf(alpha, k, n)
            checks.append(
                _compare("zipf_worst_case_lower", bound.anchor, report.log_sum, bound.value, False, alpha=alpha, k=k, n=n)
            )
            checks.append(
                _compare("permutation_log_k_factorial", "log S(P_(p)^n) <= log k!", report.log_sum, log2_factorial(k), True, slack=1e-9, alpha=alpha, k=k, n=n)
            )
            checks.append(
                _compare("shtarkov_monotone_in_n", "log S(n+1) >= log S(n)", report.log_sum, previous, False, slack=1e-12, alpha=alpha, k=k, n=n)
            )
            previous = report.log_sum
    for _ in range(10):
        k = int(rng.integers(2, 9))
        base = random_dirichlet_distribution(k, rng)
        for n in (2, 4):
            value = shtarkov_sum_permutation_class(base, n).log_sum
            checks.append(
                _compare("permutation_log_k_factorial", "log S(P_(p)^n) <= log k!", value, log2_factorial(k), True, slack=1e-9, k=k, n=n)
            )

    zipf8 = zipf_distribution(2.0, 8)
    bracket = shtarkov_sum_envelope_class(EnvelopeClass(tuple(2.0 * x for x in zipf8.probs)), 3)
    inner = shtarkov_sum_permutation_class(zipf8, 3).log_sum
    checks.append(_compare("envelope_bracket_lower", "lower <= log S(P_(zipf))", bracket.lower_log_sum, inner, True, slack=1e-9))
    checks.append(_compare("envelope_bracket_upper", "log S(P_(zipf)) <= upper", bracket.upper_log_sum, inner, False, slack=1e-9))
    return checks


# Redundancy
def redundancy_suite(run: RunConfig) -> List[CheckReport]:
    checks: List[CheckReport] = []
    rng = seeded_rng(run.seed)

    for k in (2, 4, 8):
        sources = {
            "uniform": Distribution.uniform(k),
            "zipf_1.5": zipf_distribution(1.5, k),
            "zipf_2": zipf_distribution(2.0, k),
            "dirichlet": random_dirichlet_distribution(k, rng),
        }
        for name, p in sources.items():
            for n in (2, 4, 8):
                report = achieved_redundancy(p, n)
                bound = distinct_upper_bound(k, n, expected_distinct(p, n))
                checks.append(_compare("achieved_nonnegative", "E[log p/q] >= 0", report.achieved, 0.0, False, slack=1e-12, source=name, k=k, n=n))
                checks.append(_compare("achieved_below_distinct_upper", bound.anchor, report.achieved, bound.value, True, source=name, k=k, n=n))

    single = minimax_expected_redundancy([Distribution((0.6, 0.4))], 2, run.tol)
    checks.append(_compare("minimax_single_member", "R_bar({p}) = 0", abs(single.value), 1e-9, True))
    two = minimax_expected_redundancy([Distribution((1.0, 0.0)), Distribution((0.0, 1.0))], 1, run.tol)
    checks.append(_compare("minimax_two_point_masses", "R_bar({delta_1, delta_2}^1) = 1", abs(two.value - 1.0), 1e-6, True))

    for entry in _tiny_classes():
        members, n = entry["members"], entry["n"]
        for check in (
            type_redundancy_equivalence_check(members, n, run.tol),
            lower_bound_poisson_halving_check(members, n, run.tol),
            worst_case_cap_check(members, n, run.tol),
        ):
            check.details["class"] = entry["name"]
            checks.append(check)
        if entry["closed"]:
            check = type_mass_cap_check(members, n, run.tol)
            check.details["class"] = entry["name"]
            checks.append(check)
    checks.append(distinct_lower_margin(PermutationClass(zipf_distribution(2.0, 3)).members(), 2, run.tol))

    for step in range(1, 70):
        lam = step / 100.0
        checks.append(
            _compare("poisson_entropy_bound", "H(poi(l)) <= l(log e - log l) + e^-l l^2/(1-l)", poisson_entropy(lam), poisson_entropy_bound(lam), True, lam=lam)
        )
    for lam in np.arange(0.7, 10.01, 0.1):
        lam = float(round(lam, 10))
        checks.append(
            _compare("poisson_entropy_gaussian_cap", "H(poi(l)) <= 1/2 log(2 pi e (l + 1/12))", poisson_entropy(lam), gaussian_cap(lam), True, lam=lam)
        )

    pairs = 0
    gap_failures = 0
    for k in (2, 4, 8, 16, 32):
        for p in (Distribution.uniform(k), zipf_distribution(2.0, k)):
            for n in (2, 8):
                pairs += 1
                gap_failures += not poissonization_gap_holds(p, n)
    checks.append(_failures("poissonization_gap", "|d^poi(n) - d| < 2 E[phi_2^poi(n)] / n", gap_failures, pairs))
    return checks


# Concentration
def concentration_suite(run: RunConfig) -> List[CheckReport]:
    checks: List[CheckReport] = []
    instances = ((Distribution.uniform(16), 16), (zipf_distribution(2.0, 64), 32))
    for p, n in instances:
        for s in (1.0, 2.0, 3.0):
            checks.append(concentration_check(p, n, s, run.trials, run.seed))
    checks.append(distinct_count_tail_check(Distribution.uniform(64), 64, 0.3, run.trials, run.seed))
    return checks


# Bounds
def bounds_suite(run: RunConfig) -> List[CheckReport]:
    checks: List[CheckReport] = []

    sums = zipf_small_lambda_sums(2.0, 10_000, 100)
    for key in ("n_minus_ratio", "neg_log_chain_ratio"):
        ratio = sums.notes[key]
        checks.append(
            CheckReport(
                claim=f"small_lambda_{key}",
                anchor=sums.anchor,
                passed=0.5 <= ratio <= 2.0,
                measured=ratio,
                bound=1.0,
                margin=min(ratio - 0.5, 2.0 - ratio),
            )
        )
    for alpha in ZIPF_ALPHAS:
        sums = zipf_small_lambda_sums(alpha, 10_000, 100)
        checks.append(
            _compare("small_lambda_chain", "sum -l log l <= base-2 chain", sums.notes["neg_log_exact"], sums.notes["neg_log_chain_base2"], True, alpha=alpha)
        )

    for alpha, ratio, n in product(ZIPF_ALPHAS, (2, 8, 64), (16, 256)):
        report = zipf_theorem_bounds(alpha, 1.0, ratio * n, n)
        checks.append(_compare("zipf_theorem_ordered", "lower <= upper", report.upper, report.lower, False, alpha=alpha, k=ratio * n, n=n))

    thetas = [zipf_theorem_bounds(2.0, 1.0, 8 * n, n).theta_ratio for n in (16, 64, 256)]
    spread = max(thetas) / min(thetas)
    checks.append(_compare("zipf_theta_scaling", "upper / (n^{1/alpha} log k) bounded", spread, 4.0, True, ratios=thetas))

    for alpha, (k, n) in product(ZIPF_ALPHAS, ((8, 4), (16, 4), (16, 8))):
        upper = zipf_theorem_bounds(alpha, 1.0, k, n).upper
        achieved = achieved_redundancy(zipf_distribution(alpha, k), n).achieved
        checks.append(_compare("zipf_upper_dominates_code", "achieved <= theorem upper", achieved, upper, True, alpha=alpha, k=k, n=n))

    for alpha, n, k in product(ZIPF_ALPHAS, (16, 64), (64, 256)):
        bound = envelope_distinct_bound(alpha, zipf_envelope_constant(alpha, k), k, n)
        d = expected_distinct(zipf_distribution(alpha, k), n)
        checks.append(_compare("envelope_distinct_count", bound.anchor, d, bound.value, True, alpha=alpha, k=k, n=n))

    worst = math.inf
    for k, n in product((1, 2, 3, 5, 8, 13, 21, 34, 55, 64), repeat=2):
        for d in range(1, min(n, k) + 1):
            closed = distinct_upper_bound(k, n, d).value
            binomial_form = distinct_upper_bound_binomial_form(k, n, d).value
            worst = min(worst, closed - binomial_form)
    checks.append(_compare("distinct_upper_forms", "binomial form <= closed form", worst, 0.0, False))
    return checks


SUITE_RUNNERS: Dict[str, Callable[[RunConfig], List[CheckReport]]] = {
    "codec": codec_suite,
    "shtarkov": shtarkov_suite,
    "redundancy": redundancy_suite,
    "concentration": concentration_suite,
    "bounds": bounds_suite,
}


def run_suites(run: RunConfig, names: Sequence[str]) -> Dict[str, List[CheckReport]]:
    """Run the named suites in order."""
    results = {}
    for name in names:
        logger.info(f"Running verify suite {name}")
        results[name] = SUITE_RUNNERS[name](run)
    return results


def suite_names(suite: str) -> List[str]:
    return list(SUITE_RUNNERS) if suite == "all" else [suite]


def cmd_verify(run: RunConfig) -> int:
    """Run the selected suites; exit 1 when an asserted check fails."""
    results = run_suites(run, suite_names(run.suite))
    failed = [
        f"{name}:{check.claim}"
        for name, checks in results.items()
        for check in checks
        if check.asserted and not check.passed
    ]
    for entry in failed:
        logger.error(f"Check failed: {entry}")
    report = {
        "config": run.to_dict(),
        "suites": {name: [check.to_dict() for check in checks] for name, checks in results.items()},
        "checks": sum(len(checks) for checks in results.values()),
        "failed": failed,
        "passed": not failed,
    }
    emit(dumps_report(report), run.output)
    return 1 if failed else 0
