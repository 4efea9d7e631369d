"""
Permutations in one-line notation, quadrant statistics, and alternating classes.

A permutation of length n is represented as a tuple of the values 1..n, each
occurring exactly once (one-line notation).  Its graph is the point set
{(i, p_i)}; we never materialise the graph, all quadrant counts are computed
directly from the value sequence.

Positions are 1-based throughout the public API, matching the usual
combinatorial convention.  Centering axes on the point (i, p_i), the four
quadrants hold:

    I   later positions with larger values      (j > i, p_j > p_i)
    II  earlier positions with larger values    (j < i, p_j > p_i)
    III earlier positions with smaller values   (j < i, p_j < p_i)
    IV  later positions with smaller values     (j > i, p_j < p_i)

A quadrant marked mesh pattern MMP(a, b, c, d) asks each quadrant to contain
at least a/b/c/d points, where an entry of 0 imposes no condition and the
special entry "empty" (spelled None here) demands an empty quadrant.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def check_permutation(values: Sequence[int]) -> Perm:
    """
    Validate one-line notation: a rearrangement of 1..n.  Returns the tuple.

    >>> check_permutation([2, 1])
    (2, 1)
    >>> check_permutation([1, 3])
    Traceback (most recent call last):
    ...
    ValueError: not a permutation of 1..2: (1, 3)
    """
    perm = tuple(values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def quadrant_counts(perm: Sequence[int], i: int) -> tuple[int, int, int, int]:
    """
    Number of points in quadrants I..IV relative to position i (1-based).

    The four counts always sum to n - 1.

    >>> quadrant_counts((4, 7, 1, 5, 6, 9, 2, 8, 3), 4)
    (3, 1, 2, 2)
    >>> quadrant_counts((4, 7, 1, 5, 6, 9, 2, 8, 3), 3)
    (6, 2, 0, 0)
    >>> quadrant_counts((1,), 1)
    (0, 0, 0, 0)
    """
    n = len(perm)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    vi = perm[i - 1]
    c1 = c2 = c3 = c4 = 0
    for j in range(i, n):
        if perm[j] > vi:
            c1 += 1
        else:
            c4 += 1
    for j in range(i - 1):
        if perm[j] > vi:
            c2 += 1
        else:
            c3 += 1
    return (c1, c2, c3, c4)


@dataclass(frozen=True)
class QuadrantSpec:
    """
    The four quadrant requirements of MMP(a, b, c, d).

    Each field is either a nonnegative integer k ("at least k points"; 0 means
    no condition) or None ("the quadrant must be empty").

    >>> str(QuadrantSpec(1, 0, None, 0))
    'MMP(1,0,e,0)'
    """

    q1: int | None
    q2: int | None
    q3: int | None
    q4: int | None

    def __post_init__(self) -> None:
        for req in self.requirements:
            if req is not None and (not isinstance(req, int) or req < 0):
                raise ValueError(f"quadrant requirement must be None or >= 0, got {req!r}")

    @property
    def requirements(self) -> tuple[int | None, ...]:
        return (self.q1, self.q2, self.q3, self.q4)

    def __str__(self) -> str:
        parts = ",".join("e" if r is None else str(r) for r in self.requirements)
        return f"MMP({parts})"


def matches(perm: Sequence[int], i: int, spec: QuadrantSpec) -> bool:
    """
    Does position i match the quadrant marked mesh pattern?

    >>> matches((4, 7, 1, 5, 6, 9, 2, 8, 3), 4, QuadrantSpec(2, 1, 2, 1))
    True
    >>> matches((4, 7, 1, 5, 6, 9, 2, 8, 3), 3, QuadrantSpec(4, 2, None, None))
    True
    >>> matches((2, 1), 2, QuadrantSpec(1, 0, 0, 0))
    False
    """
    counts = quadrant_counts(perm, i)
    for count, req in zip(counts, spec.requirements):
        if req is None:
            if count != 0:
                return False
        elif count < req:
            return False
    return True


def mmp_count(perm: Sequence[int], spec: QuadrantSpec) -> int:
    """
    The pattern statistic: how many positions match the spec.

    >>> mmp_count((1, 2), QuadrantSpec(1, 0, 0, 0))
    1
    >>> mmp_count((2, 1, 3), QuadrantSpec(1, 0, 0, 0))
    2
    >>> mmp_count((3, 1, 2), QuadrantSpec(1, 0, 0, 0))
    1
    """
    return sum(1 for i in range(1, len(perm) + 1) if matches(perm, i, spec))


def reverse(perm: Sequence[int]) -> Perm:
    """
    Reverse the one-line word: p_n ... p_1.

    >>> reverse((4, 7, 1, 5, 6, 9, 2, 8, 3))
    (3, 8, 2, 9, 6, 5, 1, 7, 4)
    """
    return tuple(reversed(perm))


def complement(perm: Sequence[int]) -> Perm:
    """
    Replace each value v by n + 1 - v.

    >>> complement((1, 2))
    (2, 1)
    """
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


class AlternatingClass(enum.Enum):
    """The two alternating classes: up-down (p1 < p2 > p3 < ...) and down-up."""

    UP_DOWN = "ud"
    DOWN_UP = "du"

    def rises_into(self, j: int) -> bool:
        """Whether the step into 0-based position j >= 1 must be an ascent."""
        return j % 2 == (1 if self is AlternatingClass.UP_DOWN else 0)


UP_DOWN = AlternatingClass.UP_DOWN
DOWN_UP = AlternatingClass.DOWN_UP


def is_up_down(perm: Sequence[int]) -> bool:
    """
    p1 < p2 > p3 < p4 > ...  Length-1 permutations qualify (vacuously), so
    they are members of both alternating classes.
    """
    return all((perm[j - 1] < perm[j]) == UP_DOWN.rises_into(j) for j in range(1, len(perm)))


def is_down_up(perm: Sequence[int]) -> bool:
    """p1 > p2 < p3 > p4 < ...  Length-1 permutations qualify here too."""
    return all((perm[j - 1] < perm[j]) == DOWN_UP.rises_into(j) for j in range(1, len(perm)))


def classify(perm: Sequence[int]) -> AlternatingClass | None:
    """
    Tri-state classification: UP_DOWN, DOWN_UP, or None for neither.

    A length-1 permutation belongs to both classes; classify reports UP_DOWN
    for it by convention, so use is_up_down/is_down_up when membership is what
    matters.

    >>> classify((1, 4, 2, 3)) is UP_DOWN
    True
    >>> classify((3, 1, 4, 2)) is DOWN_UP
    True
    >>> classify((1, 2, 3, 4)) is None
    True
    """
    if len(perm) == 0:
        raise ValueError("cannot classify the empty permutation")
    if is_up_down(perm):
        return UP_DOWN
    if is_down_up(perm):
        return DOWN_UP
    return None


def reduce(window: Sequence[int]) -> Perm:
    """
    Order-isomorphic standardisation: the i-th smallest entry becomes i.

    >>> reduce((5, 9, 2))
    (2, 3, 1)
    >>> reduce((1, 2, 3))
    (1, 2, 3)
    """
    if len(set(window)) != len(window):
        raise ValueError(f"window entries must be distinct: {tuple(window)}")
    rank = {v: r for r, v in enumerate(sorted(window), start=1)}
    return tuple(rank[v] for v in window)


def enumerate_alternating(n: int, cls: AlternatingClass) -> Iterator[Perm]:
    """
    Yield every alternating permutation of length n of the given class, in
    lexicographic order of the one-line word.  n = 0 yields nothing.

    Depth-first backtracking, inserting values left to right and checking the
    ascent/descent parity incrementally; memory stays O(n).

    >>> list(enumerate_alternating(2, UP_DOWN))
    [(1, 2)]
    >>> list(enumerate_alternating(3, DOWN_UP))
    [(2, 1, 3), (3, 1, 2)]
    >>> [len(p) for p in enumerate_alternating(0, UP_DOWN)]
    []
    """
    if n <= 0:
        return
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend() -> Iterator[Perm]:
        depth = len(prefix)
        if depth == n:
            yield tuple(prefix)
            return
        prev = prefix[-1] if prefix else None
        rising = cls.rises_into(depth) if depth > 0 else None
        for v in range(1, n + 1):
            if used[v]:
                continue
            if prev is not None and (prev < v) != rising:
                continue
            used[v] = True
            prefix.append(v)
            yield from extend()
            prefix.pop()
            used[v] = False

    yield from extend()
