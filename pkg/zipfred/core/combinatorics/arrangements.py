"""Lexicographic ranking of the sequences sharing one type (multiset permutations)."""

from typing import List, Sequence

from ..exceptions import ValidationError
from ..models import TypeVector
from .binomial import multinomial


def arrangement_count(t: TypeVector) -> int:
    """Number of sequences of type t: n! / prod(mu_j!)."""
    return multinomial(t.mu)


def arrangement_rank(sequence: Sequence[int], t: TypeVector) -> int:
    """Lex rank of a 1-based symbol sequence among all sequences of type t.

    Raises:
        ValidationError: If the sequence does not have type t.

    Example:
        >>> arrangement_rank([1, 2, 1], TypeVector((2, 1), 3))
        1
    """
    if len(sequence) != t.n:
        raise ValidationError("Sequence length differs from type", {"length": len(sequence), "n": t.n})
    counts = list(t.mu)
    remaining = t.n
    block = multinomial(counts)
    rank = 0
    for position, symbol in enumerate(sequence):
        index = symbol - 1
        if not 0 <= index < t.k or counts[index] == 0:
            raise ValidationError(
                "Sequence does not match type", {"position": position, "symbol": symbol}
            )
        smaller = sum(counts[:index])
        # each smaller symbol s opens block * counts[s] / remaining sequences
        rank += block * smaller // remaining
        block = block * counts[index] // remaining
        counts[index] -= 1
        remaining -= 1
    return rank


def arrangement_unrank(rank: int, t: TypeVector) -> List[int]:
    """Inverse of arrangement_rank; returns 1-based symbols.

    Raises:
        ValidationError: If rank is outside [0, multinomial(t)).
    """
    total = multinomial(t.mu)
    if not 0 <= rank < total:
        raise ValidationError("Arrangement rank out of range", {"rank": rank, "count": total})
    counts = list(t.mu)
    remaining = t.n
    block = total
    sequence: List[int] = []
    for _ in range(t.n):
        for index, c in enumerate(counts):
            if c == 0:
                continue
            width = block * c // remaining
            if rank < width:
                sequence.append(index + 1)
                block = width
                counts[index] -= 1
                remaining -= 1
                break
            rank -= width
    return sequence
