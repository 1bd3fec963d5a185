"""Integer partition calculus: conjugates, Frobenius hooks, hook families,
Schur module dimensions, and the two exterior-power decompositions used by
the resolution pipeline.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the zero partition. All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple


class FrobeniusHooks(NamedTuple):
    """Arm/leg coordinates of the diagonal boxes of a partition."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]


def is_partition(parts) -> bool:
    """
    >>> is_partition((3, 1)), is_partition((1, 3)), is_partition(())
    (True, False, True)
    """
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate((3, 2, 1))
    (3, 2, 1)
    """
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def durfee_rank(parts: tuple[int, ...]) -> int:
    """Side of the largest square inside the diagram: max{i : parts[i-1] >= i}."""
    parts = check_partition(parts)
    rank = 0
    for i, p in enumerate(parts, start=1):
        if p >= i:
            rank = i
        else:
            break
    return rank


def to_hooks(parts: tuple[int, ...]) -> FrobeniusHooks:
    """Frobenius coordinates: arm a_i = parts[i-1] - i, leg b_i = parts'[i-1] - i.

    >>> to_hooks((2, 2))
    FrobeniusHooks(arms=(1, 0), legs=(1, 0))
    >>> to_hooks((3, 2, 1))
    FrobeniusHooks(arms=(2, 0), legs=(2, 0))
    """
    parts = check_partition(parts)
    conj = conjugate(parts)
    s = durfee_rank(parts)
    arms = tuple(parts[i] - (i + 1) for i in range(s))
    legs = tuple(conj[i] - (i + 1) for i in range(s))
    return FrobeniusHooks(arms, legs)


def from_hooks(hooks: FrobeniusHooks) -> tuple[int, ...]:
    """Inverse of :func:`to_hooks`.

    >>> from_hooks(FrobeniusHooks((1, 0), (1, 0)))
    (2, 2)
    """
    arms, legs = hooks.arms, hooks.legs
    s = len(arms)
    if len(legs) != s:
        raise ValueError("arm and leg counts differ")
    if any(arms[i] <= arms[i + 1] for i in range(s - 1)) or any(
        legs[i] <= legs[i + 1] for i in range(s - 1)
    ):
        raise ValueError("arms and legs must be strictly decreasing")
    if s and (arms[-1] < 0 or legs[-1] < 0):
        raise ValueError("arms and legs must be nonnegative")
    rows = legs[0] + 1 if s else 0
    parts = []
    for i in range(1, rows + 1):
        if i <= s:
            parts.append(arms[i - 1] + i)
        else:
            parts.append(sum(1 for j in range(s) if legs[j] + (j + 1) >= i))
    result = tuple(parts)
    if not is_partition(result) or to_hooks(result) != FrobeniusHooks(arms, legs):
        raise ValueError(f"inconsistent hook data {hooks}")
    return result


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n with parts bounded by max_part."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _distinct_tuples(total: int, count: int, ceiling: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing nonnegative tuples of given length and sum, parts <= ceiling."""
    if count == 0:
        if total == 0:
            yield ()
        return
    # smallest possible remainder is (count-1) + (count-2) + ... + 0
    floor = (count - 1) * count // 2
    for first in range(min(ceiling, total - floor + (count - 1)), count - 2, -1):
        if first < 0:
            break
        for rest in _distinct_tuples(total - first, count - 1, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_Q(k_minus_1: int, weight: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of `weight` whose hooks satisfy arm = leg + k_minus_1.

    `weight` must be even.

    >>> enumerate_Q(0, 4)
    ((2, 2),)
    >>> enumerate_Q(0, 2)
    ()
    >>> enumerate_Q(1, 2)
    ((2,),)
    """
    if k_minus_1 < 0:
        raise ValueError("offset must be nonnegative")
    if weight <= 0 or weight % 2:
        raise ValueError(f"weight must be even and positive, got {weight}")
    found = []
    s = 1
    while True:
        # |lambda| = sum(a_j + b_j + 1) = 2*sum(b) + s*(k_minus_1 + 1)
        leg_sum2 = weight - s * (k_minus_1 + 1)
        if leg_sum2 < (s - 1) * s:  # minimal strictly decreasing leg sum, doubled
            break
        if leg_sum2 % 2 == 0:
            for legs in _distinct_tuples(leg_sum2 // 2, s, weight):
                arms = tuple(b + k_minus_1 for b in legs)
                found.append(from_hooks(FrobeniusHooks(arms, legs)))
        s += 1
    return tuple(sorted(found, reverse=True))


def hook_lengths(parts: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """Hook length of each cell (row, col), 1-indexed."""
    parts = check_partition(parts)
    conj = conjugate(parts)
    return {
        (i, j): (parts[i - 1] - j) + (conj[j - 1] - i) + 1
        for i in range(1, len(parts) + 1)
        for j in range(1, parts[i - 1] + 1)
    }


def schur_dim(parts: tuple[int, ...], e: int) -> int:
    """Dimension of the Schur module S_parts of an e-dimensional space.

    Hook-content formula, evaluated as one exact fraction; zero when the
    partition has more than e rows.

    >>> schur_dim((2,), 2), schur_dim((1, 1), 3), schur_dim((2, 2), 3)
    (3, 3, 6)
    """
    parts = check_partition(parts)
    if e <= 0:
        raise ValueError("space dimension must be positive")
    if len(parts) > e:
        return 0
    num = 1
    den = 1
    for (i, j), h in hook_lengths(parts).items():
        num *= e + j - i
        den *= h
    value = Fraction(num, den)
    assert value.denominator == 1
    return int(value)


def weyl_dim(weight: tuple[int, ...]) -> int:
    """Dimension of the irreducible GL representation with the given
    weakly decreasing integer highest weight (entries may be negative)."""
    n = len(weight)
    if any(weight[i] < weight[i + 1] for i in range(n - 1)):
        raise ValueError(f"weight must be weakly decreasing: {weight}")
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(weight[i] - weight[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


# Orientation note for the two decompositions below: the labels returned are
# the ones carried by the exterior power of the *argument* functor itself
# (Sym^2 E, resp. E (x) F); any dualisation happens at the call site.


def exterior_of_sym2(t: int, e: int) -> list[tuple[tuple[int, ...], int]]:
    """Summands of the t-th exterior power of Sym^2 of an e-dimensional space.

    These are the partitions of 2t with every arm exceeding its leg by one,
    each with multiplicity one; summands with more than e rows vanish and
    are dropped.

    >>> exterior_of_sym2(1, 4)
    [((2,), 1)]
    >>> exterior_of_sym2(0, 3)
    [((), 1)]
    """
    if t < 0:
        raise ValueError("exterior degree must be nonnegative")
    if t == 0:
        return [((), 1)]
    return [(lam, 1) for lam in enumerate_Q(1, 2 * t) if len(lam) <= e]


def cauchy_exterior(t: int, e: int, f: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Cauchy decomposition of the t-th exterior power of a tensor product:
    pairs (lambda, lambda') over partitions of t with at most e rows and at
    most f columns.

    >>> cauchy_exterior(1, 2, 2)
    [((1,), (1,))]
    """
    if t < 0:
        raise ValueError("exterior degree must be nonnegative")
    return [
        (lam, conjugate(lam))
        for lam in partitions_of(t, max_part=f)
        if len(lam) <= e
    ]
