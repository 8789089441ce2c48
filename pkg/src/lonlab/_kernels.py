"""Compiled inner loops for graph metrics on CSR adjacency."""

import numpy as np
from numba import njit


@njit(cache=True)
def triangle_counts(indptr, indices, n):
    """Edges among the neighbors of each node."""
    mark = np.zeros(n, dtype=np.bool_)
    tri = np.zeros(n, dtype=np.int64)
    for i in range(n):
        lo, hi = indptr[i], indptr[i + 1]
        for p in range(lo, hi):
            mark[indices[p]] = True
        c = 0
        for p in range(lo, hi):
            u = indices[p]
            for q in range(indptr[u], indptr[u + 1]):
                if mark[indices[q]]:
                    c += 1
        tri[i] = c // 2
        for p in range(lo, hi):
            mark[indices[p]] = False
    return tri


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def distance_totals(indptr, indices, n):
    """Sum of shortest-path lengths and count over ordered connected pairs.

    Every source's ball is kept as a bitset; ball(s, d) is the union of
    ball(u, d-1) over u in s and its neighbors. Nodes first reached at level d
    are at distance d. A source whose ball stops growing has exhausted its
    component and is skipped afterwards.
    """
    words = (n + 63) // 64
    cur = np.zeros((n, words), dtype=np.uint64)
    for s in range(n):
        cur[s, s >> 6] |= np.uint64(1) << np.uint64(s & 63)
    nxt = cur.copy()
    active = np.ones(n, dtype=np.bool_)
    total = 0
    pairs = 0
    d = 0
    while True:
        d += 1
        new_level = 0
        for s in range(n):
            if not active[s]:
                continue
            for w in range(words):
                nxt[s, w] = cur[s, w]
            for p in range(indptr[s], indptr[s + 1]):
                u = indices[p]
                for w in range(words):
                    nxt[s, w] |= cur[u, w]
            found = 0
            for w in range(words):
                found += np.int64(_popcount(nxt[s, w] & ~cur[s, w]))
            if found == 0:
                active[s] = False
            new_level += found
        if new_level == 0:
            break
        total += d * new_level
        pairs += new_level
        # inactive rows are already identical in both buffers
        cur, nxt = nxt, cur
    return total, pairs
