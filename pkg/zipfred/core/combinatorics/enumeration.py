"""Enumeration of types and sorted multiplicity patterns.

Types of length-n sequences over [k] are the weak compositions of n into k
parts; they are produced in ascending lexicographic order. Sorted patterns
(integer partitions of n with at most k parts) index the profile-level
grouping used by the Shtarkov engine.
"""

from functools import lru_cache
from typing import Iterator, List, Tuple
from collections import Counter

import numpy as np

from ..exceptions import InstanceTooLargeError
from .binomial import binomial, multinomial


def count_types(n: int, k: int) -> int:
    """Number of types of length-n sequences over k symbols, C(n+k-1, k-1)."""
    return binomial(n + k - 1, k - 1)


def check_type_budget(n: int, k: int, max_types: int) -> int:
    """Return the type count, raising InstanceTooLargeError above ``max_types``."""
    total = count_types(n, k)
    if total > max_types:
        raise InstanceTooLargeError(
            "Too many types for exhaustive enumeration",
            {"n": n, "k": k, "types": total, "max_types": max_types},
        )
    return total


def iter_types(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Yield every type (mu_1, ..., mu_k) with sum n, in ascending lex order."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in iter_types(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _type_grid(n: int, k: int) -> np.ndarray:
    if k == 1:
        return np.array([[n]], dtype=np.int64)
    blocks = []
    for first in range(n + 1):
        rest = _type_grid(n - first, k - 1)
        head = np.full((rest.shape[0], 1), first, dtype=np.int64)
        blocks.append(np.hstack([head, rest]))
    return np.vstack(blocks)


def type_grid(n: int, k: int) -> np.ndarray:
    """All types as an int64 array of shape (count_types(n, k), k), lex order."""
    grid = _type_grid(n, k).copy()
    grid.setflags(write=False)
    return grid


def iter_sorted_patterns(n: int, max_parts: int) -> Iterator[Tuple[int, ...]]:
    """Yield partitions of n into at most ``max_parts`` parts, each nonincreasing.

    Partitions are produced in descending lexicographic order, starting at (n,).
    """

    def _gen(remaining: int, cap: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in _gen(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from _gen(n, n, max_parts)


def pattern_type_count(pattern: Tuple[int, ...], k: int) -> int:
    """Number of types over [k] whose sorted nonzero multiplicities equal ``pattern``.

    This is k! / ((k - d)! * prod_m c_m!) with c_m the repeat count of each value.
    """
    d = len(pattern)
    repeats = list(Counter(pattern).values()) + [k - d]
    return multinomial(repeats)


def pattern_sequence_count(pattern: Tuple[int, ...], k: int) -> int:
    """Number of sequences over [k] whose sorted multiplicities equal ``pattern``."""
    return pattern_type_count(pattern, k) * multinomial(pattern)


def sequences_of_type(mu: Tuple[int, ...]) -> List[List[int]]:
    """Every 1-based sequence with type ``mu`` (small inputs only, lex order)."""
    result: List[List[int]] = []
    counts = list(mu)
    n = sum(counts)
    current: List[int] = []

    def _walk() -> None:
        if len(current) == n:
            result.append(list(current))
            return
        for index, c in enumerate(counts):
            if c:
                counts[index] -= 1
                current.append(index + 1)
                _walk()
                current.pop()
                counts[index] += 1

    _walk()
    return result
