"""Tests for the closed-form bound evaluators and the bound table."""

import json
import math

import pandas as pd
import pytest

from zipfred.core.bounds import (
    CSV_COLUMNS,
    GRID_CLAIMS,
    bound_table,
    bounds_grid,
    clamp_distinct,
    distinct_lower_bound,
    distinct_upper_bound,
    distinct_upper_bound_binomial_form,
    envelope_distinct_bound,
    small_lambda_penalty,
    worst_case_lower_bound_zipf,
    zipf_small_lambda_sums,
    zipf_theorem_bounds,
)
from zipfred.core.exceptions import InfeasibleInstanceError, ValidationError
from zipfred.core.models import expected_distinct, zipf_distribution, zipf_envelope_constant, zipf_normalizer
from zipfred.core.redundancy import achieved_redundancy


class TestBoundReport:
    """Test the per-term breakdown."""

    def test_value_is_sum_of_terms(self):
        """The value is the compensated sum of the signed terms."""
        report = distinct_upper_bound(64, 32, 5.5)
        assert report.value == math.fsum(report.terms.values())
        assert report.to_dict()["name"] == "distinct_upper_bound"


class TestDistinctBounds:
    """Test bounds in terms of the expected distinct count."""

    def test_upper_closed_form(self):
        """k = n = 8, d = 2."""
        report = distinct_upper_bound(8, 8, 2)
        assert report.terms["d_log2_kn_over_d2"] == pytest.approx(8.0)
        assert report.terms["log2_n_plus_1"] == pytest.approx(math.log2(9))
        assert report.value == pytest.approx(8.0 + 2 * (2 * math.log2(math.e) + 1) + math.log2(9))

    @pytest.mark.parametrize("d", [0, -1.0, 9])
    def test_upper_domain(self, d):
        """d must lie in (0, min(n, k)]."""
        with pytest.raises(ValidationError):
            distinct_upper_bound(8, 16, d)

    @pytest.mark.parametrize("k", [1, 3, 8, 21, 64])
    @pytest.mark.parametrize("n", [1, 2, 13, 55])
    def test_binomial_form_below_closed_form(self, k, n):
        """log n + log C(k,d) + log C(n-1,d-1) never exceeds the closed form."""
        for d in range(1, min(n, k) + 1):
            assert distinct_upper_bound_binomial_form(k, n, d).value <= distinct_upper_bound(k, n, d).value

    def test_binomial_form_clamps(self):
        """A real d is rounded into range and recorded."""
        report = distinct_upper_bound_binomial_form(10, 4, 2.6)
        assert report.notes == {"d_raw": 2.6, "d_clamped": 3}

    def test_clamp_distinct(self):
        """Rounded and clamped to [1, upper]."""
        assert clamp_distinct(0.2, 5) == 1
        assert clamp_distinct(7.6, 5) == 5
        assert clamp_distinct(2.4, 5) == 2

    def test_small_lambda_penalty(self):
        """Only 0 < lambda < threshold contributes."""
        assert small_lambda_penalty([0.5, 0.0, 2.0]) == pytest.approx(1.5 + 0.5)
        assert small_lambda_penalty([0.8], threshold=0.7) == 0.0

    def test_distinct_lower_bound_terms(self):
        """Four signed terms and the recorded asymptotic factor."""
        lambdas = [4.0, 0.5, 0.25]
        report = distinct_lower_bound(3, 4, 2.2, lambdas)
        assert report.terms["log2_binom_k_d"] == pytest.approx(math.log2(3))
        assert report.terms["minus_small_lambda_penalty"] == pytest.approx(-small_lambda_penalty(lambdas))
        assert report.notes["asymptotic_factor"] == 1.0
        assert report.value < report.terms["log2_binom_k_d"]

    @pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0])
    @pytest.mark.parametrize("n", [16, 64])
    @pytest.mark.parametrize("k", [64, 256])
    def test_envelope_distinct_bound_covers_zipf(self, alpha, n, k):
        """zipf(alpha, k) expects no more distinct symbols than its envelope allows."""
        report = envelope_distinct_bound(alpha, zipf_envelope_constant(alpha, k), k, n)
        assert expected_distinct(zipf_distribution(alpha, k), n) <= report.value

    def test_envelope_exact_notes(self):
        """Head count counts f(i) >= 1/n."""
        report = envelope_distinct_bound(2.0, 1.0, 100, 16)
        assert report.notes["head_count_exact"] == 4
        assert report.terms["head_count"] == pytest.approx(4.0)


class TestZipfBounds:
    """Test Zipf-specific bounds."""

    def test_worst_case_terms(self):
        """n log((k - n) / (n^alpha C))."""
        report = worst_case_lower_bound_zipf(2.0, 16, 4)
        expected = 4 * math.log2(12 / (16 * zipf_normalizer(2.0, 16)))
        assert report.value == pytest.approx(expected)
        assert report.constants["C_k_alpha"] == zipf_normalizer(2.0, 16)

    @pytest.mark.parametrize("alpha, k, n", [(2.0, 8, 3), (1.5, 2, 2), (3.0, 1, 1)])
    def test_worst_case_infeasible(self, alpha, k, n):
        """n^alpha > k or k <= n is infeasible."""
        with pytest.raises(InfeasibleInstanceError):
            worst_case_lower_bound_zipf(alpha, k, n)

    def test_alpha_validation(self):
        """alpha <= 1 is a validation error."""
        with pytest.raises(ValidationError):
            worst_case_lower_bound_zipf(1.0, 16, 2)

    def test_small_lambda_ratios(self):
        """Exact sums track their approximations within a factor of two."""
        report = zipf_small_lambda_sums(2.0, 10_000, 100)
        assert 0.5 <= report.notes["n_minus_ratio"] <= 2.0
        assert 0.5 <= report.notes["neg_log_chain_ratio"] <= 2.0
        assert report.notes["threshold_index"] == 9
        assert report.value == pytest.approx(
            3 * report.notes["n_minus_exact"] + report.notes["neg_log_exact"]
        )

    @pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0])
    def test_small_lambda_chain(self, alpha):
        """The exact -lambda log lambda sum stays under the base-2 chain."""
        notes = zipf_small_lambda_sums(alpha, 10_000, 100).notes
        assert notes["neg_log_exact"] <= notes["neg_log_chain_base2"]

    def test_small_lambda_infeasible(self):
        """Every symbol above the threshold leaves nothing to sum."""
        with pytest.raises(InfeasibleInstanceError):
            zipf_small_lambda_sums(2.0, 4, 1000)

    @pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0])
    @pytest.mark.parametrize("ratio", [2, 8, 64])
    @pytest.mark.parametrize("n", [16, 256])
    def test_theorem_ordered(self, alpha, ratio, n):
        """The lower side never exceeds the upper side."""
        report = zipf_theorem_bounds(alpha, 1.0, ratio * n, n)
        assert report.lower <= report.upper
        assert set(report.constants) == {"C_k_alpha", "c1", "c1_prime", "c2"}

    def test_theta_scaling(self):
        """upper / (n^{1/alpha} log k) stays within a factor of four."""
        ratios = [zipf_theorem_bounds(2.0, 1.0, 8 * n, n).theta_ratio for n in (16, 64, 256)]
        assert max(ratios) / min(ratios) <= 4.0

    @pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0])
    @pytest.mark.parametrize("k, n", [(8, 4), (16, 4), (16, 8)])
    def test_theorem_upper_dominates_code(self, alpha, k, n):
        """The code's exact redundancy on zipf(alpha, k) sits below the upper side."""
        upper = zipf_theorem_bounds(alpha, 1.0, k, n).upper
        assert achieved_redundancy(zipf_distribution(alpha, k), n).achieved <= upper

    def test_theorem_infeasible(self):
        """k <= n is infeasible."""
        with pytest.raises(InfeasibleInstanceError):
            zipf_theorem_bounds(2.0, 1.0, 8, 8)


class TestBoundTable:
    """Test grid tabulation."""

    def test_grid_shape(self):
        """One row per claim per point, two for the theorem."""
        frame = bounds_grid([2.0], [1.0], [2000], [16, 32])
        assert list(frame.columns) == CSV_COLUMNS
        assert len(frame) == 2 * (len(GRID_CLAIMS) + 1)
        assert frame["feasible"].all()
        assert set(frame["claim"]) >= {"zipf_theorem_upper", "zipf_theorem_lower"}

    def test_infeasible_rows(self):
        """n > k rows are flagged with the reason, not raised."""
        frame = bounds_grid([2.0], [1.0], [4], [8])
        theorem = frame[frame["claim"] == "zipf_theorem_bounds"].iloc[0]
        assert not theorem["feasible"]
        assert math.isnan(theorem["value"])
        assert json.loads(theorem["detail"])["type"] == "InfeasibleInstanceError"

    def test_bound_table(self):
        """Reports become rows with JSON details."""
        frame = bound_table([distinct_upper_bound(8, 8, 2)])
        assert isinstance(frame, pd.DataFrame)
        assert json.loads(frame.loc[0, "detail"])["terms"]["d_log2_kn_over_d2"] == pytest.approx(8.0)
