"""RunConfig: the fully resolved settings of one CLI invocation."""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional
import argparse

from ..core.config import Config, DEFAULT_SEED

FORMATS = ("json", "csv")
SUITES = ("shtarkov", "codec", "redundancy", "concentration", "bounds", "all")
UNITS = ("token", "char")


@dataclass
class RunConfig:
    """Settings of one command, embedded in every report it emits.

    Attributes:
        command: Subcommand name.
        class_file: Class-description JSON, if any.
        n: Block length.
        k: Alphabet size.
        alpha: Zipf power(s); a list for grids.
        c: Envelope constant(s); a list for grids.
        seed: Monte Carlo seed.
        trials: Monte Carlo trials.
        tol: Oracle tolerance in bits.
        output: Output path; None writes to stdout.
        format: "json" or "csv".
    """

    command: str
    class_file: Optional[str] = None
    n: List[int] = field(default_factory=list)
    k: List[int] = field(default_factory=list)
    alpha: List[float] = field(default_factory=list)
    c: List[float] = field(default_factory=list)
    seed: int = DEFAULT_SEED
    trials: int = 100_000
    tol: float = 1e-7
    output: Optional[str] = None
    format: str = "json"
    input: Optional[str] = None
    alphabet: Optional[str] = None
    unit: str = "token"
    suite: str = "all"
    minimax: bool = False

    @property
    def single_n(self) -> Optional[int]:
        return self.n[0] if self.n else None

    @property
    def single_k(self) -> Optional[int]:
        return self.k[0] if self.k else None

    @property
    def single_alpha(self) -> Optional[float]:
        return self.alpha[0] if self.alpha else None

    @property
    def single_c(self) -> Optional[float]:
        return self.c[0] if self.c else None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Merge parsed arguments over the configured defaults."""
        config = Config()

        def _listed(value: Any) -> list:
            if value is None:
                return []
            return list(value) if isinstance(value, (list, tuple)) else [value]

        default_format = "csv" if args.command == "bounds" else config.get("output.format", "json")
        n_values = _listed(getattr(args, "n", None))
        if not n_values and args.command == "encode":
            n_values = [config.get_int("codec.block_length", 256)]
        return cls(
            command=args.command,
            class_file=getattr(args, "class_file", None),
            n=n_values,
            k=_listed(getattr(args, "k", None)),
            alpha=_listed(getattr(args, "alpha", None)),
            c=_listed(getattr(args, "c", None)),
            seed=args.seed if args.seed is not None else config.get_int("lab.seed", DEFAULT_SEED),
            trials=args.trials if args.trials is not None else config.get_int("lab.trials", 100_000),
            tol=args.tol if args.tol is not None else config.get_float("lab.tol", 1e-7),
            output=args.output,
            format=args.format or default_format,
            input=getattr(args, "input", None),
            alphabet=getattr(args, "alphabet", None),
            unit=getattr(args, "unit", None) or "token",
            suite=getattr(args, "suite", None) or "all",
            minimax=bool(getattr(args, "minimax", False)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
