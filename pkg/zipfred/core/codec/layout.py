"""Codec parameters and the four-field codeword layout."""

from dataclasses import dataclass
from typing import Any, Dict
import math

from ..combinatorics import binomial, bit_width, compositions_count, multinomial
from ..exceptions import ValidationError
from ..models import TypeVector
from ..utils import log2_int, validate_positive_int


@dataclass(frozen=True)
class CodecParams:
    """Alphabet size k and block length n shared by encoder and decoder."""

    k: int
    n: int

    def __post_init__(self) -> None:
        validate_positive_int(self.k, "k")
        validate_positive_int(self.n, "n")

    @property
    def max_distinct(self) -> int:
        return min(self.n, self.k)

    @property
    def d_bits(self) -> int:
        """Width of the distinct-count field, which stores d - 1."""
        return bit_width(self.max_distinct)

    def normalizer(self, d: int) -> int:
        """N_d = n * C(k, d) * C(n-1, d-1), the per-d normalizer of the implied q."""
        return self.n * binomial(self.k, d) * binomial(self.n - 1, d - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "n": self.n}


@dataclass(frozen=True)
class CodewordLayout:
    """Ranks and bit widths of the four fields (d, subset, composition, arrangement)."""

    d: int
    d_bits: int
    subset_rank: int
    subset_bits: int
    composition_rank: int
    composition_bits: int
    arrangement_rank: int
    arrangement_bits: int

    @property
    def total_bits(self) -> int:
        return self.d_bits + self.subset_bits + self.composition_bits + self.arrangement_bits

    def fields(self):
        """(value, width) pairs in stream order."""
        return (
            (self.d - 1, self.d_bits),
            (self.subset_rank, self.subset_bits),
            (self.composition_rank, self.composition_bits),
            (self.arrangement_rank, self.arrangement_bits),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "d_bits": self.d_bits,
            "subset_rank": str(self.subset_rank),
            "subset_bits": self.subset_bits,
            "composition_rank": str(self.composition_rank),
            "composition_bits": self.composition_bits,
            "arrangement_rank": str(self.arrangement_rank),
            "arrangement_bits": self.arrangement_bits,
            "total_bits": self.total_bits,
        }


def layout_widths(t: TypeVector, params: CodecParams) -> Dict[str, int]:
    """Field widths for every sequence of type t."""
    if t.k != params.k or t.n != params.n:
        raise ValidationError(
            "Type does not match codec parameters",
            {"type_k": t.k, "type_n": t.n, "k": params.k, "n": params.n},
        )
    d = t.distinct_count
    return {
        "d_bits": params.d_bits,
        "subset_bits": bit_width(binomial(params.k, d)),
        "composition_bits": bit_width(compositions_count(params.n, d)),
        "arrangement_bits": bit_width(multinomial(t.positive_parts)),
    }


def ideal_breakdown(t: TypeVector, params: CodecParams) -> Dict[str, float]:
    """Real-valued counterpart of each field: log n, log C(k,d), log C(n-1,d-1), log multinomial."""
    d = t.distinct_count
    return {
        "distinct_count": math.log2(params.n),
        "support": log2_int(binomial(params.k, d)),
        "composition": log2_int(compositions_count(params.n, d)),
        "arrangement": log2_int(multinomial(t.positive_parts)),
    }
