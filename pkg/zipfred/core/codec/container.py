"""UEC1 container: framed, byte-aligned codewords.

A frame is the magic ``b"UEC1"``, then n and k as unsigned LEB128 varints,
then the codeword bits packed MSB-first and zero-padded to a byte boundary.
Long streams are a concatenation of frames with a common k; every frame
carries its own n, so the last block may be shorter.
"""

from typing import List, Optional, Sequence, Tuple
import logging

from bitarray import bitarray

from ..combinatorics import bit_width
from ..exceptions import CorruptStreamError, ValidationError
from ..utils import validate_positive_int
from .encoder import decode_prefix, encode
from .layout import CodecParams

logger = logging.getLogger(__name__)

MAGIC = b"UEC1"

# LEB128 groups beyond this many bytes cannot come from a sane header.
MAX_VARINT_BYTES = 10


def encode_varint(value: int) -> bytes:
    """Unsigned LEB128 encoding, 7 bits per byte, low group first."""
    if value < 0:
        raise ValidationError("Varint value must be nonnegative", {"value": value})
    out = bytearray()
    while True:
        group = value & 0x7F
        value >>= 7
        if value:
            out.append(group | 0x80)
        else:
            out.append(group)
            return bytes(out)


def decode_varint(data: bytes, offset: int) -> Tuple[int, int]:
    """Read one LEB128 varint; returns (value, new offset)."""
    value = 0
    shift = 0
    for i in range(MAX_VARINT_BYTES):
        if offset + i >= len(data):
            raise CorruptStreamError("Header truncated inside a varint", {"offset": offset})
        byte = data[offset + i]
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value, offset + i + 1
        shift += 7
    raise CorruptStreamError("Varint too long", {"offset": offset})


def _max_payload_bits(params: CodecParams) -> int:
    # C(k, d) < 2^k, C(n-1, d-1) < 2^n and multinomial <= k^n
    return params.d_bits + params.k + params.n + params.n * bit_width(params.k) + 1


def encode_frame(sequence: Sequence[int], params: CodecParams) -> bytes:
    """Encode one block into a UEC1 frame."""
    payload = encode(sequence, params)
    header = MAGIC + encode_varint(params.n) + encode_varint(params.k)
    return header + payload.tobytes()


def decode_frame(data: bytes, offset: int = 0) -> Tuple[CodecParams, List[int], int]:
    """Decode the frame starting at ``offset``.

    Returns:
        The frame's params, the decoded sequence and the offset after the frame.

    Raises:
        CorruptStreamError: On bad magic, a malformed header, a truncated
            payload or nonzero padding bits.
    """
    if data[offset : offset + len(MAGIC)] != MAGIC:
        raise CorruptStreamError("Bad magic", {"offset": offset})
    position = offset + len(MAGIC)
    n, position = decode_varint(data, position)
    k, position = decode_varint(data, position)
    try:
        params = CodecParams(k=k, n=n)
    except ValidationError as e:
        raise CorruptStreamError("Invalid header", {"n": n, "k": k}) from e

    window = data[position : position + (_max_payload_bits(params) + 7) // 8]
    bits = bitarray(endian="big")
    bits.frombytes(window)
    sequence, consumed = decode_prefix(bits, params)

    frame_bytes = (consumed + 7) // 8
    if bits[consumed : frame_bytes * 8].any():
        raise CorruptStreamError("Nonzero padding bits", {"offset": offset})
    return params, sequence, position + frame_bytes


def encode_stream(symbols: Sequence[int], k: int, block_length: int) -> bytes:
    """Split a symbol stream into blocks of ``block_length`` and frame each one.

    The last block holds the remainder and records its own length.
    """
    k = validate_positive_int(k, "k")
    block_length = validate_positive_int(block_length, "block_length")
    if len(symbols) == 0:
        raise ValidationError("Cannot encode an empty stream")
    frames = []
    for start in range(0, len(symbols), block_length):
        block = symbols[start : start + block_length]
        frames.append(encode_frame(block, CodecParams(k=k, n=len(block))))
    logger.info(f"Encoded {len(symbols)} symbols into {len(frames)} UEC1 frames")
    return b"".join(frames)


def decode_stream(
    data: bytes, k: Optional[int] = None, block_length: Optional[int] = None
) -> List[int]:
    """Decode every frame in ``data``.

    Args:
        data: Concatenated UEC1 frames.
        k: Expected alphabet size; checked against each frame header when given.
        block_length: Expected block length. Every frame but the last must
            carry exactly this n; the last may be shorter.

    Raises:
        CorruptStreamError: On any malformed frame or a k or n mismatch.
    """
    if not data:
        raise CorruptStreamError("Empty container")
    symbols: List[int] = []
    offset = 0
    frame_k = k
    while offset < len(data):
        params, sequence, offset = decode_frame(data, offset)
        if frame_k is not None and params.k != frame_k:
            raise CorruptStreamError(
                "Alphabet size mismatch with header", {"expected": frame_k, "header": params.k}
            )
        frame_k = params.k
        if block_length is not None:
            is_last = offset >= len(data)
            if params.n > block_length or (not is_last and params.n != block_length):
                raise CorruptStreamError(
                    "Block length mismatch with header",
                    {"expected": block_length, "header": params.n, "last": is_last},
                )
        symbols.extend(sequence)
    return symbols
