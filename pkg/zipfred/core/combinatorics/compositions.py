"""Lexicographic ranking of compositions of n into d positive parts."""

from typing import List, Sequence

from ..exceptions import ValidationError
from .binomial import binomial, compositions_count


def composition_rank(parts: Sequence[int]) -> int:
    """Lex rank of ``parts`` among compositions of sum(parts) into len(parts) parts.

    Example:
        >>> composition_rank([2, 1])
        1
    """
    if not parts:
        raise ValidationError("Composition must have at least one part")
    if any(c < 1 for c in parts):
        raise ValidationError("Composition parts must be positive", {"parts": list(parts)})

    remaining = sum(parts)
    rank = 0
    for i, c in enumerate(parts[:-1]):
        after = len(parts) - i - 1
        # sum over v < c of C(remaining - v - 1, after - 1), by the hockey-stick identity
        rank += binomial(remaining - 1, after) - binomial(remaining - c, after)
        remaining -= c
    return rank


def composition_unrank(rank: int, n: int, d: int) -> List[int]:
    """Inverse of composition_rank.

    Raises:
        ValidationError: If d is not in [1, n] or rank is outside [0, C(n-1, d-1)).
    """
    if not 1 <= d <= n:
        raise ValidationError("Composition needs 1 <= d <= n", {"n": n, "d": d})
    if not 0 <= rank < compositions_count(n, d):
        raise ValidationError("Composition rank out of range", {"rank": rank, "n": n, "d": d})

    parts: List[int] = []
    remaining = n
    for i in range(d - 1):
        after = d - i - 1
        value = 1
        while True:
            block = compositions_count(remaining - value, after)
            if rank < block:
                break
            rank -= block
            value += 1
        parts.append(value)
        remaining -= value
    parts.append(remaining)
    return parts
