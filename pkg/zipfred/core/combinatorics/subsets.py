"""Colexicographic ranking of d-subsets of {0, ..., k-1}."""

from typing import List, Sequence

from ..exceptions import ValidationError
from .binomial import binomial


def _validate_subset(subset: Sequence[int], k: int) -> None:
    if any(b <= a for a, b in zip(subset, subset[1:])):
        raise ValidationError("Subset must be strictly increasing", {"subset": list(subset)})
    if subset and (subset[0] < 0 or subset[-1] >= k):
        raise ValidationError("Subset element outside [0, k)", {"subset": list(subset), "k": k})


def subset_rank(subset: Sequence[int], k: int) -> int:
    """Colex rank: sum over j of C(s_j, j) for the sorted elements s_1 < ... < s_d.

    Example:
        >>> subset_rank([1, 2], 3)
        2
    """
    _validate_subset(subset, k)
    return sum(binomial(s, j) for j, s in enumerate(subset, start=1))


def subset_unrank(rank: int, d: int, k: int) -> List[int]:
    """Inverse of subset_rank for d-subsets of [0, k).

    Raises:
        ValidationError: If rank is outside [0, C(k, d)) or d > k.
    """
    if d < 0 or d > k:
        raise ValidationError("Subset size outside [0, k]", {"d": d, "k": k})
    if not 0 <= rank < binomial(k, d):
        raise ValidationError("Subset rank out of range", {"rank": rank, "d": d, "k": k})

    subset = [0] * d
    upper = k
    for j in range(d, 0, -1):
        # largest s < upper with C(s, j) <= rank
        lo, hi = j - 1, upper - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if binomial(mid, j) <= rank:
                lo = mid
            else:
                hi = mid - 1
        subset[j - 1] = lo
        rank -= binomial(lo, j)
        upper = lo
    return subset
