"""Closed-form bound evaluators with per-term breakdowns."""

from .report import BoundReport
from .distinct import (
    clamp_distinct,
    distinct_upper_bound,
    distinct_upper_bound_binomial_form,
    distinct_lower_bound,
    small_lambda_penalty,
    envelope_distinct_bound,
)
from .zipf import (
    ZipfTheoremReport,
    worst_case_lower_bound_zipf,
    zipf_small_lambda_sums,
    zipf_theorem_bounds,
)
from .table import CSV_COLUMNS, GRID_CLAIMS, bound_table, bounds_grid

__all__ = [
    # Report
    "BoundReport",
    # Distinct-count bounds
    "clamp_distinct",
    "distinct_upper_bound",
    "distinct_upper_bound_binomial_form",
    "distinct_lower_bound",
    "small_lambda_penalty",
    "envelope_distinct_bound",
    # Zipf bounds
    "ZipfTheoremReport",
    "worst_case_lower_bound_zipf",
    "zipf_small_lambda_sums",
    "zipf_theorem_bounds",
    # Tables
    "CSV_COLUMNS",
    "GRID_CLAIMS",
    "bound_table",
    "bounds_grid",
]
