"""Cross-check the fast pipeline against the naive reference implementations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, TextIO

from . import oracle
from .basin_stats import (fit_basin_size_distribution, fit_degree_distribution, fit_degree_vs_size,
                          fit_fitness_vs_size)
from .basins import compute_basins
from .errors import DegenerateFitError
from .landscape import make_landscape
from .lon import build_lon
from .metrics import (assortativity, clustering_coefficient, component_count,
                      cumulative_degree_distribution, mean_path_length)

METRIC_TOL = 1e-9
OLS_TOL = 1e-12
MAX_VERIFY_N = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    k: int
    seed: int
    ok: bool
    detail: str = ""


def _close(a: float | None, b: float | None, tol: float) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return math.isclose(a, b, rel_tol=tol, abs_tol=tol)


def _fit_matches(fast, xs, ys) -> tuple[bool, str]:
    try:
        got = fast()
    except DegenerateFitError:
        got = None
    want = oracle.naive_ols(xs, ys)
    if got is None or want is None:
        return got is None and want is None, f"fast={got} naive={want}"
    rho, alpha, beta = want
    ok = _close(got.rho, rho, OLS_TOL) and _close(got.alpha, alpha, OLS_TOL) and _close(got.beta, beta, OLS_TOL)
    return ok, f"fast=({got.rho}, {got.alpha}, {got.beta}) naive=({rho}, {alpha}, {beta})"


def check_instance(n: int, k: int, seed: int, lon_builder: Callable = build_lon) -> list[CheckResult]:
    """All oracle checks for one landscape; ``lon_builder`` can be swapped to test the harness."""
    land = make_landscape(n, k, seed)
    results = []

    def record(name, ok, detail=""):
        results.append(CheckResult(name, n, k, seed, bool(ok), "" if ok else detail))

    basins = compute_basins(land)
    optima, assignment = oracle.naive_basins(land)
    record("basins", list(basins.configs) == optima and basins.assignment.tolist() == assignment,
           "assignment differs from per-start local search")

    lon = lon_builder(basins)
    edges = oracle.naive_edges(assignment, n)
    got_edges = {(int(a), int(b)) for a, b in lon.edges}
    record("edges", got_edges == edges and lon.node_count == len(optima),
           f"{len(got_edges ^ edges)} edges differ")

    adj = oracle.adjacency_sets(len(optima), edges)
    for name, fast, slow in [
        ("clustering", clustering_coefficient(lon), oracle.naive_clustering(adj)),
        ("path_length", mean_path_length(lon), oracle.naive_path_length(adj)),
        ("assortativity", assortativity(lon), oracle.naive_assortativity(adj, edges)),
    ]:
        record(name, _close(fast, slow, METRIC_TOL), f"fast={fast} naive={slow}")
    record("components", component_count(lon) == oracle.naive_components(adj), "component count differs")
    counts = oracle.naive_cumulative_counts(adj)
    dist = cumulative_degree_distribution(lon)
    record("degree_distribution", dist.counts.tolist() == counts, "cumulative counts differ")

    sizes = [assignment.count(i) for i in range(len(optima))]
    table = oracle.naive_fitness_table(land)
    fitness = [table[c] for c in optima]
    degree = [len(a) for a in adj]
    distinct = sorted(set(sizes))
    ok, detail = _fit_matches(lambda: fit_degree_distribution(dist),
                              range(len(counts)), [math.log(c) for c in counts])
    record("ols_degree_distribution", ok, detail)
    ok, detail = _fit_matches(lambda: fit_basin_size_distribution(basins), distinct,
                              [math.log(sum(1 for s in sizes if s >= v)) for v in distinct])
    record("ols_basin_sizes", ok, detail)
    ok, detail = _fit_matches(lambda: fit_fitness_vs_size(basins), fitness, [math.log(s) for s in sizes])
    record("ols_fitness_size", ok, detail)
    ok, detail = _fit_matches(lambda: fit_degree_vs_size(basins, lon), degree, [math.log(s) for s in sizes])
    record("ols_degree_size", ok, detail)
    return results


def verify(max_n: int = 8, seeds: int = 5, out: TextIO | None = None,
           lon_builder: Callable = build_lon) -> bool:
    """Run every check for all ``n <= max_n``, all ``k < n`` and seeds ``0..seeds-1``.

    Prints one line per (check, n) with pass counts; returns True when all pass.
    """
    if max_n > MAX_VERIFY_N:
        raise ValueError(f"max_n must be <= {MAX_VERIFY_N}")
    all_ok = True
    for n in range(1, max_n + 1):
        tally: dict[str, list[CheckResult]] = {}
        for k in range(n):
            for seed in range(seeds):
                for res in check_instance(n, k, seed, lon_builder):
                    tally.setdefault(res.name, []).append(res)
        for name, results in tally.items():
            bad = [r for r in results if not r.ok]
            all_ok &= not bad
            status = "PASS" if not bad else "FAIL"
            line = f"{status} {name:<24} n={n:<2} {len(results) - len(bad)}/{len(results)}"
            if bad:
                r = bad[0]
                line += f"  first failure k={r.k} seed={r.seed}: {r.detail}"
            if out is not None:
                print(line, file=out)
    return all_ok

