"""
Compiled fast path for the exhaustive enumeration oracle.

Pattern requirements are encoded as an int64[4] array: k >= 0 means "at least
k points in that quadrant" and -1 means "the quadrant must be empty".  The
histogram slot s counts permutations whose statistic equals s; every count
fits comfortably in int64 (the largest enumerated class has ~2 * 10^8
members at the hard length guard).

Falls back gracefully: callers must check AVAILABLE before importing the
kernel functions.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit

    AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    AVAILABLE = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True, nogil=True)
def _statistic(perm, n, req):
    s = 0
    for i in range(n):
        vi = perm[i]
        c1 = c2 = c3 = c4 = 0
        for j in range(n):
            if j < i:
                if perm[j] > vi:
                    c2 += 1
                else:
                    c3 += 1
            elif j > i:
                if perm[j] > vi:
                    c1 += 1
                else:
                    c4 += 1
        ok = True
        if req[0] >= 0:
            if c1 < req[0]:
                ok = False
        elif c1 != 0:
            ok = False
        if ok:
            if req[1] >= 0:
                if c2 < req[1]:
                    ok = False
            elif c2 != 0:
                ok = False
        if ok:
            if req[2] >= 0:
                if c3 < req[2]:
                    ok = False
            elif c3 != 0:
                ok = False
        if ok:
            if req[3] >= 0:
                if c4 < req[3]:
                    ok = False
            elif c4 != 0:
                ok = False
        if ok:
            s += 1
    return s


@njit(cache=True, nogil=True)
def count_distribution(n, rise_parity, req, prefix, hist):
    """
    Accumulate into hist the statistic histogram over all alternating
    permutations of length n extending the given prefix.

    rise_parity selects the class: the step into 0-based position j must be
    an ascent exactly when j % 2 == rise_parity (1 for up-down, 0 for
    down-up).  Enumeration is iterative depth-first in lexicographic order.
    """
    perm = np.zeros(n, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.uint8)
    p = len(prefix)
    for i in range(p):
        perm[i] = prefix[i]
        used[prefix[i]] = 1
    if p == n:
        hist[_statistic(perm, n, req)] += 1
        return

    depth = p
    cand = 1
    while depth >= p:
        v = cand
        placed = -1
        while v <= n:
            if used[v] == 0:
                if depth == 0:
                    placed = v
                    break
                prev = perm[depth - 1]
                if (depth % 2) == rise_parity:
                    if prev < v:
                        placed = v
                        break
                elif prev > v:
                    placed = v
                    break
            v += 1
        if placed < 0:
            depth -= 1
            if depth < p:
                break
            cand = perm[depth] + 1
            used[perm[depth]] = 0
            continue
        perm[depth] = placed
        used[placed] = 1
        if depth == n - 1:
            hist[_statistic(perm, n, req)] += 1
            used[placed] = 0
            cand = placed + 1
        else:
            depth += 1
            cand = 1
