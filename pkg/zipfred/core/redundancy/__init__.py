"""Expected-redundancy laboratory: exact achieved redundancy, the minimax
oracle, Poisson-sampling entropy and Monte Carlo concentration checks."""

from .reports import CheckReport, MinimaxResult, PoissonEntropyReport, RedundancyReport
from .achieved import achieved_redundancy
from .minimax import (
    capacity_oracle,
    sequence_channel,
    type_channel,
    poisson_truncation,
    poisson_type_channel,
    minimax_expected_redundancy,
    type_redundancy_equivalence_check,
    lower_bound_poisson_halving_check,
    worst_case_cap_check,
    type_mass_cap_check,
    distinct_lower_margin,
)
from .poisson import (
    poisson_entropy,
    poisson_entropy_bound,
    small_lambda_cap,
    gaussian_cap,
    type_entropy_poisson,
)
from .concentration import concentration_check, distinct_count_tail_check

__all__ = [
    # Reports
    "CheckReport",
    "MinimaxResult",
    "PoissonEntropyReport",
    "RedundancyReport",
    # Achieved redundancy
    "achieved_redundancy",
    # Minimax oracle and checks
    "capacity_oracle",
    "sequence_channel",
    "type_channel",
    "poisson_truncation",
    "poisson_type_channel",
    "minimax_expected_redundancy",
    "type_redundancy_equivalence_check",
    "lower_bound_poisson_halving_check",
    "worst_case_cap_check",
    "type_mass_cap_check",
    "distinct_lower_margin",
    # Poisson entropy
    "poisson_entropy",
    "poisson_entropy_bound",
    "small_lambda_cap",
    "gaussian_cap",
    "type_entropy_poisson",
    # Monte Carlo
    "concentration_check",
    "distinct_count_tail_check",
]
