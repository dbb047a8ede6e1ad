"""Lossless enumerative encoder and decoder.

A length-n sequence over [k] is written as four fixed-width big-endian
fields: d - 1 (number of distinct symbols), the colex rank of the support
subset, the lex rank of the multiplicity composition, and the lex rank of
the sequence within its type class. Every width is a function of (k, n) and
of fields already read, so the payload is self-delimiting.
"""

from typing import List, Sequence, Tuple
import logging
import math

from bitarray import bitarray
from bitarray.util import ba2int, int2ba

from ..combinatorics import (
    arrangement_rank,
    arrangement_unrank,
    binomial,
    bit_width,
    composition_rank,
    composition_unrank,
    compositions_count,
    multinomial,
    subset_rank,
    subset_unrank,
)
from ..exceptions import CodecError, CorruptStreamError, ValidationError
from ..models import TypeVector, type_of
from .layout import CodecParams, CodewordLayout, layout_widths

logger = logging.getLogger(__name__)


def encode_layout(sequence: Sequence[int], params: CodecParams) -> CodewordLayout:
    """Compute the four ranks and widths for a sequence without serializing it.

    Raises:
        CodecError: On a length mismatch, empty sequence or out-of-range symbol.
    """
    if len(sequence) != params.n:
        raise CodecError("Sequence length differs from n", {"length": len(sequence), "n": params.n})
    try:
        t = type_of(sequence, params.k)
    except ValidationError as e:
        raise CodecError(e.message, e.details) from e

    widths = layout_widths(t, params)
    return CodewordLayout(
        d=t.distinct_count,
        d_bits=widths["d_bits"],
        subset_rank=subset_rank(list(t.support), params.k),
        subset_bits=widths["subset_bits"],
        composition_rank=composition_rank(t.positive_parts),
        composition_bits=widths["composition_bits"],
        arrangement_rank=arrangement_rank(sequence, t),
        arrangement_bits=widths["arrangement_bits"],
    )


def _write_field(out: bitarray, value: int, width: int) -> None:
    if width:
        out.extend(int2ba(value, length=width, endian="big"))


def encode(sequence: Sequence[int], params: CodecParams) -> bitarray:
    """Encode a sequence of 1-based symbols into its payload bits.

    Example:
        >>> len(encode([2, 1, 3, 1, 3, 1], CodecParams(k=4, n=6)))   # "banana"
        14
    """
    layout = encode_layout(sequence, params)
    out = bitarray(endian="big")
    for value, width in layout.fields():
        _write_field(out, value, width)
    logger.debug(f"Encoded n={params.n} k={params.k} d={layout.d} into {len(out)} bits")
    return out


class _FieldReader:
    """Sequential fixed-width big-endian reader over a bitarray."""

    def __init__(self, bits: bitarray, offset: int = 0) -> None:
        self.bits = bits
        self.position = offset

    def read(self, width: int, name: str) -> int:
        if width == 0:
            return 0
        end = self.position + width
        if end > len(self.bits):
            raise CorruptStreamError(
                "Payload truncated",
                {"field": name, "needed": end, "available": len(self.bits)},
            )
        value = ba2int(self.bits[self.position : end])
        self.position = end
        return value


def decode_prefix(bits: bitarray, params: CodecParams, offset: int = 0) -> Tuple[List[int], int]:
    """Decode one codeword starting at ``offset``.

    Returns:
        The decoded 1-based sequence and the number of bits consumed.

    Raises:
        CorruptStreamError: On truncation or an out-of-range field.
    """
    reader = _FieldReader(bits, offset)

    d = reader.read(params.d_bits, "d") + 1
    if d > params.max_distinct:
        raise CorruptStreamError("Distinct count out of range", {"d": d, "max": params.max_distinct})

    subsets = binomial(params.k, d)
    s_rank = reader.read(bit_width(subsets), "subset")
    if s_rank >= subsets:
        raise CorruptStreamError("Subset rank out of range", {"rank": s_rank, "count": subsets})

    compositions = compositions_count(params.n, d)
    c_rank = reader.read(bit_width(compositions), "composition")
    if c_rank >= compositions:
        raise CorruptStreamError(
            "Composition rank out of range", {"rank": c_rank, "count": compositions}
        )

    support = subset_unrank(s_rank, d, params.k)
    parts = composition_unrank(c_rank, params.n, d)
    mu = [0] * params.k
    for symbol, count in zip(support, parts):
        mu[symbol] = count
    t = TypeVector(tuple(mu), params.n)

    arrangements = multinomial(parts)
    a_rank = reader.read(bit_width(arrangements), "arrangement")
    if a_rank >= arrangements:
        raise CorruptStreamError(
            "Arrangement rank out of range", {"rank": a_rank, "count": arrangements}
        )

    sequence = arrangement_unrank(a_rank, t)
    return sequence, reader.position - offset


def decode(bits: bitarray, params: CodecParams) -> List[int]:
    """Decode a payload produced by :func:`encode` with the same params.

    Raises:
        CorruptStreamError: If the payload is truncated, has trailing bits,
            or carries an out-of-range field.
    """
    sequence, consumed = decode_prefix(bits, params)
    if consumed != len(bits):
        raise CorruptStreamError(
            "Payload length does not match decoded layout",
            {"consumed": consumed, "length": len(bits)},
        )
    return sequence


def codeword_length(t: TypeVector, params: CodecParams) -> int:
    """Total payload bits for any sequence of type t (no bitstring is built)."""
    return sum(layout_widths(t, params).values())


def implied_log_prob(t: TypeVector, params: CodecParams) -> float:
    """Ideal codelength -log2 q(x^n) = log2 N_d + sum_j mu_j log2(n / mu_j)."""
    normalizer = params.normalizer(t.distinct_count)
    ml_bits = math.fsum(m * math.log2(params.n / m) for m in t.positive_parts)
    return math.log2(normalizer) + ml_bits
