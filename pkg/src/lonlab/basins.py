"""Best-improvement hill climbing and exhaustive basin-of-attraction mapping."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError
from .landscape import Landscape, eval_fitness
from .io import format_real

DEFAULT_MAX_EXHAUSTIVE_N = 24


@dataclass(frozen=True)
class Optimum:
    id: int
    config: int
    fitness: float
    basin_size: int


@dataclass(frozen=True, eq=False)
class BasinMap:
    """Total mapping of configurations to local optima.

    Optima are numbered in ascending order of their configuration integer.

    Attributes:
        n: Number of genes.
        assignment: ``int32`` array of length ``2**n``; optimum id per configuration.
        configs: Configuration of each optimum, ascending.
        fitness: Fitness of each optimum.
        basin_sizes: Number of configurations attracted to each optimum.
    """

    n: int
    assignment: np.ndarray
    configs: np.ndarray
    fitness: np.ndarray
    basin_sizes: np.ndarray

    @property
    def optima_count(self) -> int:
        return len(self.configs)

    def optimum(self, i: int) -> Optimum:
        return Optimum(i, int(self.configs[i]), float(self.fitness[i]), int(self.basin_sizes[i]))

    def optima(self) -> list[Optimum]:
        return [self.optimum(i) for i in range(self.optima_count)]


def local_search(landscape: Landscape, start: int) -> int:
    """Climb from ``start`` to a local optimum by best improvement.

    Each step evaluates all ``n`` neighbors and moves to the fittest one only if
    it is strictly fitter. Equal-fitness best neighbors resolve to the smallest
    flipped bit.
    """
    if not 0 <= start < landscape.size:
        raise ValueError(f"configuration {start} out of range for n={landscape.n}")
    s = start
    fs = eval_fitness(landscape, s)
    while True:
        best, best_f = -1, -np.inf
        for i in range(landscape.n):
            t = s ^ (1 << i)
            ft = eval_fitness(landscape, t)
            if ft > best_f:
                best, best_f = t, ft
        if not fs < best_f:
            return s
        s, fs = best, best_f


def _uphill_chunk(fitness: np.ndarray, n: int, lo: int, hi: int, out: np.ndarray) -> None:
    idx = np.arange(lo, hi, dtype=np.int64)
    best_f = fitness[idx ^ 1]
    best_bit = np.zeros(hi - lo, dtype=np.int64)
    for i in range(1, n):
        cand = fitness[idx ^ (1 << i)]
        better = cand > best_f
        best_f = np.where(better, cand, best_f)
        best_bit[better] = i
    out[lo:hi] = np.where(best_f > fitness[lo:hi], idx ^ (np.int64(1) << best_bit), idx)


def uphill_successors(fitness: np.ndarray, n: int, threads: int = 1) -> np.ndarray:
    """One best-improvement step from every configuration (optima map to themselves)."""
    size = 1 << n
    out = np.empty(size, dtype=np.int64)
    chunks = max(1, min(threads, size // 4096 or 1))
    bounds = np.linspace(0, size, chunks + 1).astype(np.int64)
    if chunks == 1:
        _uphill_chunk(fitness, n, 0, size, out)
    else:
        with ThreadPoolExecutor(chunks) as pool:
            list(pool.map(lambda b: _uphill_chunk(fitness, n, int(b[0]), int(b[1]), out),
                          zip(bounds[:-1], bounds[1:])))
    return out


def check_capacity(n: int, max_exhaustive_n: int = DEFAULT_MAX_EXHAUSTIVE_N) -> None:
    if n > max_exhaustive_n:
        raise CapacityError(f"n={n} exceeds the exhaustive cap of {max_exhaustive_n}")


def compute_basins(landscape: Landscape, threads: int = 1,
                   max_exhaustive_n: int = DEFAULT_MAX_EXHAUSTIVE_N,
                   fitness: np.ndarray | None = None) -> BasinMap:
    """Run best-improvement local search from every configuration.

    The one-step successor map is computed for the whole space, then pointer
    jumping follows each climb to its end. Every configuration on a climb
    shares the endpoint, so this equals independent per-start runs.

    Raises:
        CapacityError: if ``n`` exceeds ``max_exhaustive_n``.
    """
    check_capacity(landscape.n, max_exhaustive_n)
    if fitness is None:
        fitness = landscape.fitness_vector()
    succ = uphill_successors(fitness, landscape.n, threads)
    optima = np.flatnonzero(succ == np.arange(len(succ)))
    root = succ
    while True:
        nxt = root[root]
        if np.array_equal(nxt, root):
            break
        root = nxt
    assignment = np.searchsorted(optima, root).astype(np.int32)
    sizes = np.bincount(assignment, minlength=len(optima)).astype(np.int64)
    return BasinMap(n=landscape.n, assignment=assignment, configs=optima.astype(np.int64),
                    fitness=fitness[optima].copy(), basin_sizes=sizes)


def global_optimum(basins: BasinMap) -> Optimum:
    """The fittest optimum; exact ties go to the smaller configuration."""
    # configs are ascending, and argmax returns the first maximum
    return basins.optimum(int(np.argmax(basins.fitness)))


def write_nodes_csv(path: str | os.PathLike, basins: BasinMap, degrees: np.ndarray | None = None) -> None:
    """Write ``nodes.csv``; degree is -1 when no network has been built."""
    with open(path, "w", newline="") as fh:
        fh.write("id,config,fitness,basin_size,degree\n")
        for i in range(basins.optima_count):
            deg = -1 if degrees is None else int(degrees[i])
            fh.write(f"{i},{int(basins.configs[i])},{format_real(basins.fitness[i])},"
                     f"{int(basins.basin_sizes[i])},{deg}\n")
