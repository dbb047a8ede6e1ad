"""Exact big-integer ranking and unranking primitives for enumerative coding."""

from .binomial import binomial, multinomial, compositions_count, bit_width
from .subsets import subset_rank, subset_unrank
from .compositions import composition_rank, composition_unrank
from .arrangements import arrangement_count, arrangement_rank, arrangement_unrank
from .enumeration import (
    count_types,
    check_type_budget,
    iter_types,
    type_grid,
    iter_sorted_patterns,
    pattern_type_count,
    pattern_sequence_count,
    sequences_of_type,
)

__all__ = [
    # Counts
    "binomial",
    "multinomial",
    "compositions_count",
    "bit_width",
    # Subsets (colex)
    "subset_rank",
    "subset_unrank",
    # Compositions (lex)
    "composition_rank",
    "composition_unrank",
    # Arrangements within a type (lex)
    "arrangement_count",
    "arrangement_rank",
    "arrangement_unrank",
    # Enumeration
    "count_types",
    "check_type_budget",
    "iter_types",
    "type_grid",
    "iter_sorted_patterns",
    "pattern_type_count",
    "pattern_sequence_count",
    "sequences_of_type",
]
