"""Probability-model layer: distributions, Zipf laws, unordered classes and
sequence statistics."""

from .distribution import (
    Distribution,
    ZipfClass,
    zipf_distribution,
    zipf_normalizer,
    random_dirichlet_distribution,
)
from .statistics import (
    TypeVector,
    Profile,
    PoissonOccupancy,
    type_of,
    profile_of,
    expected_distinct,
    expected_distinct_poisson,
    poisson_occupancy,
    poissonization_gap_holds,
)
from .classes import (
    EnvelopeClass,
    PermutationClass,
    DistinctBoundedClass,
    zipf_envelope_constant,
)
from .sampling import sample_sequence, sample_poisson_counts
from .serialization import (
    parse_class_description,
    load_class_description,
    dump_class_description,
)

__all__ = [
    # Distributions
    "Distribution",
    "ZipfClass",
    "zipf_distribution",
    "zipf_normalizer",
    "random_dirichlet_distribution",
    # Statistics
    "TypeVector",
    "Profile",
    "PoissonOccupancy",
    "type_of",
    "profile_of",
    "expected_distinct",
    "expected_distinct_poisson",
    "poisson_occupancy",
    "poissonization_gap_holds",
    # Classes
    "EnvelopeClass",
    "PermutationClass",
    "DistinctBoundedClass",
    "zipf_envelope_constant",
    # Sampling
    "sample_sequence",
    "sample_poisson_counts",
    # Class-description files
    "parse_class_description",
    "load_class_description",
    "dump_class_description",
]
