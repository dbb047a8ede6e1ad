"""Exact binomial and multinomial counts on Python integers."""

from math import comb
from typing import Iterable

from ..exceptions import ValidationError


def binomial(n: int, r: int) -> int:
    """Exact C(n, r); 0 when r > n.

    Example:
        >>> binomial(64, 32)
        1832624140942590534
    """
    if n < 0 or r < 0:
        raise ValidationError("binomial arguments must be nonnegative", {"n": n, "r": r})
    if r > n:
        return 0
    return comb(n, r)


def multinomial(parts: Iterable[int]) -> int:
    """Exact n! / prod(m!) for n = sum(parts), built from binomials."""
    total = 0
    count = 1
    for m in parts:
        if m < 0:
            raise ValidationError("multinomial parts must be nonnegative", {"part": m})
        total += m
        count *= comb(total, m)
    return count


def compositions_count(n: int, d: int) -> int:
    """Number of compositions of n into d positive parts, C(n-1, d-1)."""
    if d == 0:
        return 1 if n == 0 else 0
    if n < d:
        return 0
    return comb(n - 1, d - 1)


def bit_width(count: int) -> int:
    """Field width ceil(log2(count)) needed to index ``count`` objects.

    A single object needs 0 bits.
    """
    if count < 1:
        raise ValidationError("bit_width needs a positive count", {"count": count})
    return (count - 1).bit_length()
