"""Subcommand implementations. Each returns the process exit code."""

from pathlib import Path
from typing import Any, Dict, List, Union
import logging

from ..core.bounds import bounds_grid, distinct_upper_bound
from ..core.codec import (
    CodecParams,
    decode_stream,
    encode_layout,
    encode_stream,
    ideal_breakdown,
)
from ..core.exceptions import ValidationError
from ..core.models import (
    Distribution,
    EnvelopeClass,
    PermutationClass,
    ZipfClass,
    expected_distinct,
    load_class_description,
    type_of,
)
from ..core.redundancy import (
    achieved_redundancy,
    minimax_expected_redundancy,
    type_entropy_poisson,
)
from ..core.shtarkov import shtarkov_sum_envelope_class, shtarkov_sum_permutation_class
from .files import (
    dumps_report,
    emit,
    emit_table,
    read_alphabet,
    read_tokens,
    render_tokens,
    tokens_to_symbols,
)
from .run_config import RunConfig

logger = logging.getLogger(__name__)

ClassObject = Union[ZipfClass, EnvelopeClass, PermutationClass, Distribution]

EXIT_OK = 0


def _require(value: Any, flag: str) -> Any:
    if value is None:
        raise ValidationError(f"Missing required option {flag}")
    return value


def resolve_class(run: RunConfig) -> ClassObject:
    """Class from --class, the envelope c i^-alpha from --alpha/--c/--k, or zipf(alpha, k)."""
    if run.class_file:
        return load_class_description(run.class_file)
    alpha = _require(run.single_alpha, "--alpha (or --class)")
    k = _require(run.single_k, "--k (or --class)")
    if run.single_c is not None:
        return EnvelopeClass.power_law(alpha, run.single_c, k)
    return ZipfClass(alpha, k)


def cmd_encode(run: RunConfig) -> int:
    """Encode a token file into a UEC1 container and report codeword lengths."""
    alphabet = read_alphabet(_require(run.alphabet, "--alphabet"))
    tokens = read_tokens(_require(run.input, "--input"), run.unit)
    symbols = tokens_to_symbols(tokens, alphabet)
    if not symbols:
        raise ValidationError("Input holds no tokens")
    k = len(alphabet)
    if run.single_k is not None and run.single_k != k:
        raise ValidationError("--k disagrees with the alphabet size", {"k": run.single_k, "alphabet": k})
    block_length = _require(run.single_n, "--n")

    blocks: List[Dict[str, Any]] = []
    for start in range(0, len(symbols), block_length):
        block = symbols[start : start + block_length]
        params = CodecParams(k=k, n=len(block))
        layout = encode_layout(block, params)
        blocks.append(
            {
                "n": params.n,
                "layout": layout.to_dict(),
                "ideal_bits": ideal_breakdown(type_of(block, k), params),
            }
        )
    data = encode_stream(symbols, k, block_length)
    Path(_require(run.output, "--output")).write_bytes(data)

    emit(
        dumps_report(
            {
                "config": run.to_dict(),
                "tokens": len(symbols),
                "k": k,
                "payload_bits": sum(b["layout"]["total_bits"] for b in blocks),
                "container_bytes": len(data),
                "blocks": blocks,
            }
        ),
        None,
    )
    return EXIT_OK


def cmd_decode(run: RunConfig) -> int:
    """Decode a UEC1 container back into a token file."""
    alphabet = read_alphabet(_require(run.alphabet, "--alphabet"))
    try:
        data = Path(_require(run.input, "--input")).read_bytes()
    except OSError as e:
        raise ValidationError(f"Cannot read container {run.input}", {"error": str(e)}) from e
    symbols = decode_stream(data, k=len(alphabet), block_length=run.single_n)
    tokens = [alphabet[s - 1] for s in symbols]
    emit(render_tokens(tokens, run.unit), run.output)
    return EXIT_OK


def cmd_bounds(run: RunConfig) -> int:
    """Evaluate every bound over the (alpha, c, k, n) grid."""
    frame = bounds_grid(
        _require(run.alpha or None, "--alpha"),
        run.c or [1.0],
        _require(run.k or None, "--k"),
        _require(run.n or None, "--n"),
    )
    emit_table(frame, run.format, run.output, run.to_dict())
    return EXIT_OK


def cmd_shtarkov(run: RunConfig) -> int:
    """Shtarkov sum of a permutation or envelope class."""
    description = resolve_class(run)
    n = _require(run.single_n, "--n")
    if isinstance(description, ZipfClass):
        report = shtarkov_sum_permutation_class(description.distribution(), n, alpha=description.alpha)
    elif isinstance(description, PermutationClass):
        report = shtarkov_sum_permutation_class(description.base, n)
    elif isinstance(description, Distribution):
        report = shtarkov_sum_permutation_class(description, n)
    else:
        report = shtarkov_sum_envelope_class(description, n)
    emit(dumps_report({"config": run.to_dict(), "report": report.to_dict()}), run.output)
    return EXIT_OK


def _members(description: ClassObject) -> List[Distribution]:
    if isinstance(description, ZipfClass):
        return [description.distribution()]
    if isinstance(description, PermutationClass):
        return [description.base]
    if isinstance(description, Distribution):
        return [description]
    members = description.candidate_members()
    if not members:
        raise ValidationError("Envelope admits no distribution")
    return members


def cmd_redundancy(run: RunConfig) -> int:
    """Achieved redundancy, its distinct-count bound and the Poisson type entropy."""
    description = resolve_class(run)
    n = _require(run.single_n, "--n")
    entries = []
    for p in _members(description):
        d = expected_distinct(p, n)
        entry: Dict[str, Any] = {
            "probs": list(p.probs),
            "expected_distinct": d,
            "achieved": achieved_redundancy(p, n).to_dict(),
            "distinct_upper_bound": distinct_upper_bound(p.k, n, d).to_dict(),
            "poisson_type_entropy": type_entropy_poisson(p, n).to_dict(),
        }
        if run.minimax:
            members = PermutationClass(p).members()
            entry["minimax_permutation_class"] = minimax_expected_redundancy(
                members, n, run.tol, outcomes="type"
            ).to_dict()
        entries.append(entry)
    emit(dumps_report({"config": run.to_dict(), "class": description.to_dict(), "members": entries}), run.output)
    return EXIT_OK
