"""Zipfred core: probability models, enumerative codec, Shtarkov engine,
redundancy lab and bound evaluators."""

from . import models
from . import combinatorics
from . import codec
from . import shtarkov
from . import redundancy
from . import bounds
from .config import Config
from .logger import setup_logging, get_logger, reset_logging, set_log_level
from .exceptions import (
    ZipfredError,
    ValidationError,
    ConfigurationError,
    CodecError,
    CorruptStreamError,
    InstanceTooLargeError,
    InfeasibleInstanceError,
    ConvergenceError,
)
from .utils import (
    PROB_TOL,
    log2_safe,
    log2_int,
    logsumexp2,
    seeded_rng,
    spawn_rngs,
    validate_positive_int,
    validate_probability_vector,
)

__all__ = [
    "models",
    "combinatorics",
    "codec",
    "shtarkov",
    "redundancy",
    "bounds",
    "Config",
    "setup_logging",
    "get_logger",
    "reset_logging",
    "set_log_level",
    "ZipfredError",
    "ValidationError",
    "ConfigurationError",
    "CodecError",
    "CorruptStreamError",
    "InstanceTooLargeError",
    "InfeasibleInstanceError",
    "ConvergenceError",
    # Numeric utilities
    "PROB_TOL",
    "log2_safe",
    "log2_int",
    "logsumexp2",
    # Random utilities
    "seeded_rng",
    "spawn_rngs",
    # Validation utilities
    "validate_positive_int",
    "validate_probability_vector",
]
