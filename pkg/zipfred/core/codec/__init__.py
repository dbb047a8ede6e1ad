"""Enumerative codec: four-field codewords and the UEC1 container."""

from .layout import CodecParams, CodewordLayout, layout_widths, ideal_breakdown
from .encoder import (
    encode,
    encode_layout,
    decode,
    decode_prefix,
    codeword_length,
    implied_log_prob,
)
from .container import (
    MAGIC,
    encode_varint,
    decode_varint,
    encode_frame,
    decode_frame,
    encode_stream,
    decode_stream,
)

__all__ = [
    # Parameters and layout
    "CodecParams",
    "CodewordLayout",
    "layout_widths",
    "ideal_breakdown",
    # Codeword
    "encode",
    "encode_layout",
    "decode",
    "decode_prefix",
    "codeword_length",
    "implied_log_prob",
    # Container
    "MAGIC",
    "encode_varint",
    "decode_varint",
    "encode_frame",
    "decode_frame",
    "encode_stream",
    "decode_stream",
]
