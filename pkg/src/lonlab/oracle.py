"""Slow reference implementations used to cross-check the fast pipeline.

Everything here is plain Python over sets, dicts and lists: per-start hill
climbing with scalar fitness evaluation, an all-neighbors boundary scan,
per-source BFS, and textbook summation formulas. Nothing is shared with the
vectorized code paths except the scalar fitness evaluator.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction

from .landscape import Landscape, eval_fitness


def naive_fitness_table(landscape: Landscape) -> list[float]:
    return [eval_fitness(landscape, s) for s in range(landscape.size)]


def naive_climb(fitness: list[float], n: int, start: int) -> int:
    s = start
    while True:
        vals = [(fitness[s ^ (1 << i)], -i) for i in range(n)]
        best_f, neg_i = max(vals)
        if fitness[s] < best_f:
            s ^= 1 << (-neg_i)
        else:
            return s


def naive_basins(landscape: Landscape) -> tuple[list[int], list[int]]:
    """Optimum configurations (ascending) and per-configuration optimum id."""
    fitness = naive_fitness_table(landscape)
    ends = [naive_climb(fitness, landscape.n, s) for s in range(landscape.size)]
    optima = sorted(set(ends))
    ids = {c: i for i, c in enumerate(optima)}
    return optima, [ids[e] for e in ends]


def naive_edges(assignment: list[int], n: int) -> set[tuple[int, int]]:
    edges = set()
    for s in range(1 << n):
        for i in range(n):
            a, b = assignment[s], assignment[s ^ (1 << i)]
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return edges


def adjacency_sets(node_count: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(node_count)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def naive_clustering(adj: list[set[int]]) -> float | None:
    if not adj:
        return None
    total = 0.0
    for i, nbrs in enumerate(adj):
        k = len(nbrs)
        if k < 2:
            continue
        links = sum(1 for u in nbrs for w in nbrs if u < w and w in adj[u])
        total += 2.0 * links / (k * (k - 1))
    return total / len(adj)


def naive_path_length(adj: list[set[int]]) -> float | None:
    if len(adj) < 2:
        return None
    total = pairs = 0
    for src in range(len(adj)):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        total += sum(dist.values())
        pairs += len(dist) - 1
    return total / pairs if pairs else None


def naive_components(adj: list[set[int]]) -> int:
    seen = set()
    count = 0
    for src in range(len(adj)):
        if src in seen:
            continue
        count += 1
        stack = [src]
        seen.add(src)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def naive_assortativity(adj: list[set[int]], edges) -> float | None:
    edges = list(edges)
    m = len(edges)
    if m == 0:
        return None
    deg = [len(a) for a in adj]
    prod = sum(deg[a] * deg[b] for a, b in edges) / m
    mean = sum(0.5 * (deg[a] + deg[b]) for a, b in edges) / m
    sq = sum(0.5 * (deg[a] ** 2 + deg[b] ** 2) for a, b in edges) / m
    den = sq - mean * mean
    if abs(den) <= 1e-12 * max(sq, 1.0):
        return None
    return (prod - mean * mean) / den


def naive_cumulative_counts(adj: list[set[int]]) -> list[int]:
    deg = [len(a) for a in adj]
    top = max(deg) if deg else 0
    return [sum(1 for d in deg if d >= k) for k in range(top + 1)]


def naive_ols(xs, ys) -> tuple[float | None, float, float] | None:
    """(rho, alpha, beta) from raw sums in exact rational arithmetic.

    Returns None when the fit is degenerate.
    """
    xs = [Fraction(float(v)) for v in xs]
    ys = [Fraction(float(v)) for v in ys]
    m = len(xs)
    if m < 2 or len(set(xs)) < 2:
        return None
    sx, sy = sum(xs), sum(ys)
    sxx = m * sum(x * x for x in xs) - sx * sx
    sxy = m * sum(x * y for x, y in zip(xs, ys)) - sx * sy
    syy = m * sum(y * y for y in ys) - sy * sy
    beta = sxy / sxx
    alpha = (sy - beta * sx) / m
    if syy == 0:
        return None, float(alpha), 0.0
    rho = math.copysign(math.sqrt(sxy * sxy / (sxx * syy)), sxy)
    return rho, float(alpha), float(beta)
