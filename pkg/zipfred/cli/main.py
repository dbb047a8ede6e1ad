"""Command-line entry point: argument parsing, dispatch and exit codes.

Exit codes:
    0  success
    1  an asserted verify check failed, or the oracle did not converge
    2  invalid arguments, configuration or input data
    3  the instance is infeasible for the requested bound or too large
"""

from typing import Callable, Dict, List, Optional
import argparse
import json
import logging
import sys

from ..core.config import Config
from ..core.exceptions import (
    CodecError,
    ConfigurationError,
    InfeasibleInstanceError,
    InstanceTooLargeError,
    ValidationError,
    ZipfredError,
)
from ..core.logger import setup_logging
from .commands import cmd_bounds, cmd_decode, cmd_encode, cmd_redundancy, cmd_shtarkov
from .run_config import FORMATS, SUITES, UNITS, RunConfig
from .verify import cmd_verify

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "bounds": cmd_bounds,
    "shtarkov": cmd_shtarkov,
    "redundancy": cmd_redundancy,
    "verify": cmd_verify,
}


def _seed(text: str) -> int:
    return int(text, 0)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--class", dest="class_file", help="class-description JSON file")
    parser.add_argument("--seed", type=_seed, help="Monte Carlo seed (decimal or 0x hex)")
    parser.add_argument("--trials", type=int, help="Monte Carlo trials")
    parser.add_argument("--tol", type=float, help="oracle tolerance in bits")
    parser.add_argument("--format", choices=FORMATS, help="report format")
    parser.add_argument("--output", help="output path (default: stdout)")
    parser.add_argument("--config", help="configuration file (yaml, toml or json)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")


def _scalars(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="block length")
    parser.add_argument("--k", type=int, help="alphabet size")
    parser.add_argument("--alpha", type=float, help="Zipf power")
    parser.add_argument("--c", type=float, help="envelope constant")


def _token_io(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="input file")
    parser.add_argument("--alphabet", required=True, help="alphabet file, one token per line")
    parser.add_argument("--unit", choices=UNITS, default="token", help="token or char")


def build_parser() -> argparse.ArgumentParser:
    """Build the ``zipfred`` argument parser."""
    parser = argparse.ArgumentParser(
        prog="zipfred",
        description="Universal coding and redundancy lab for unordered distribution classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    encode = sub.add_parser("encode", help="encode tokens into a UEC1 container")
    _common(encode)
    _scalars(encode)
    _token_io(encode)

    decode = sub.add_parser("decode", help="decode a UEC1 container into tokens")
    _common(decode)
    _scalars(decode)
    _token_io(decode)

    bounds = sub.add_parser("bounds", help="evaluate the redundancy bounds on a grid")
    _common(bounds)
    bounds.add_argument("--n", type=int, nargs="+", help="block lengths")
    bounds.add_argument("--k", type=int, nargs="+", help="alphabet sizes")
    bounds.add_argument("--alpha", type=float, nargs="+", help="Zipf powers")
    bounds.add_argument("--c", type=float, nargs="+", help="envelope constants")

    shtarkov = sub.add_parser("shtarkov", help="worst-case redundancy of a class")
    _common(shtarkov)
    _scalars(shtarkov)

    redundancy = sub.add_parser("redundancy", help="expected redundancy of the code")
    _common(redundancy)
    _scalars(redundancy)
    redundancy.add_argument(
        "--minimax", action="store_true", help="also compute the permutation-class minimax value"
    )

    verify = sub.add_parser("verify", help="run the verification suites")
    _common(verify)
    verify.add_argument("--suite", choices=SUITES, default="all", help="suite to run")
    return parser


def _configure(args: argparse.Namespace) -> None:
    config = Config()
    if args.config:
        config.reload(args.config)
    if args.log_level:
        config.set("logging.level", args.log_level)
    setup_logging(config, force=True)


def _fail(error: ZipfredError, code: int) -> int:
    sys.stderr.write(json.dumps({"error": error.to_dict(), "exit_code": code}, default=str) + "\n")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Run one ``zipfred`` command and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        _configure(args)
        run = RunConfig.from_args(args)
        logger.debug(f"Running {run.command}")
        return COMMANDS[run.command](run)
    except (InfeasibleInstanceError, InstanceTooLargeError) as e:
        return _fail(e, EXIT_INFEASIBLE)
    except (ValidationError, ConfigurationError, CodecError) as e:
        return _fail(e, EXIT_USAGE)
    except ZipfredError as e:
        return _fail(e, EXIT_FAILED)
