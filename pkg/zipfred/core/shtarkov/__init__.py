"""Worst-case redundancy engine: exact Shtarkov sums at desk scale."""

from .report import METHODS, ShtarkovReport
from .permutation import (
    log2_factorial,
    max_likelihood_permutation,
    shtarkov_sum_permutation_class,
    shtarkov_sum_exhaustive,
    shtarkov_sum_permutation_exhaustive,
    distinct_sequences_log_sum,
)
from .envelope import shtarkov_sum_envelope_class

__all__ = [
    "METHODS",
    "ShtarkovReport",
    "log2_factorial",
    "max_likelihood_permutation",
    "shtarkov_sum_permutation_class",
    "shtarkov_sum_exhaustive",
    "shtarkov_sum_permutation_exhaustive",
    "distinct_sequences_log_sum",
    "shtarkov_sum_envelope_class",
]
