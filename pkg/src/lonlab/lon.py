"""Local optima networks: optima as nodes, basin adjacency as edges."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .basins import BasinMap


@dataclass(frozen=True, eq=False)
class LocalOptimaNetwork:
    """Undirected simple graph over the optima of one landscape.

    Attributes:
        node_count: Number of optima, isolated ones included.
        edges: ``(m, 2)`` int64 array of ``(i, j)`` pairs with ``i < j``, sorted
            lexicographically.
        indptr, indices: CSR adjacency; neighbors of ``i`` are
            ``indices[indptr[i]:indptr[i+1]]`` in ascending order.
        fitness, basin_sizes, configs: Per-node annotations.
        boundary_counts: Number of Hamming-1 configuration pairs straddling each
            edge. Kept for reference; the network itself is unweighted.
    """

    node_count: int
    edges: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    fitness: np.ndarray
    basin_sizes: np.ndarray
    configs: np.ndarray
    boundary_counts: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]


def csr_from_edges(node_count: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric CSR adjacency (sorted neighbor lists) from an ``i < j`` edge list."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=node_count), out=indptr[1:])
    return indptr, dst[order]


def network_from_edges(node_count: int, edges, fitness=None, basin_sizes=None, configs=None) -> LocalOptimaNetwork:
    """Wrap a bare edge list as a network; annotations default to zeros.

    Edges are canonicalized (``i < j``, deduplicated, sorted). Self-loops are
    rejected.
    """
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if np.any(arr[:, 0] == arr[:, 1]):
        raise ValueError("self-loops are not allowed")
    if arr.size and (arr.min() < 0 or arr.max() >= node_count):
        raise ValueError("edge endpoint out of range")
    arr = np.sort(arr, axis=1)
    arr = np.unique(arr, axis=0) if len(arr) else arr
    indptr, indices = csr_from_edges(node_count, arr)
    zeros = np.zeros(node_count)
    return LocalOptimaNetwork(
        node_count=node_count, edges=arr, indptr=indptr, indices=indices,
        fitness=zeros if fitness is None else np.asarray(fitness, dtype=np.float64),
        basin_sizes=np.zeros(node_count, np.int64) if basin_sizes is None else np.asarray(basin_sizes),
        configs=np.zeros(node_count, np.int64) if configs is None else np.asarray(configs),
        boundary_counts=np.zeros(len(arr), np.int64))


def _boundary_keys(assignment: np.ndarray, n: int, bit: int, stride: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    lower = idx[((idx >> bit) & 1) == 0]
    a = assignment[lower].astype(np.int64)
    b = assignment[lower | (1 << bit)].astype(np.int64)
    cross = a != b
    a, b = a[cross], b[cross]
    return np.minimum(a, b) * stride + np.maximum(a, b)


def build_lon(basins: BasinMap, threads: int = 1) -> LocalOptimaNetwork:
    """Connect two optima whenever some Hamming-1 pair straddles their basins.

    Every unordered configuration pair is visited once (per flipped bit, from
    the endpoint whose bit is 0). Pair keys from all bits are merged and
    deduplicated, so the result does not depend on ``threads``.
    """
    nv = basins.optima_count
    bits = range(basins.n)
    if threads > 1 and basins.n > 1:
        with ThreadPoolExecutor(min(threads, basins.n)) as pool:
            parts = list(pool.map(lambda b: _boundary_keys(basins.assignment, basins.n, b, nv), bits))
    else:
        parts = [_boundary_keys(basins.assignment, basins.n, b, nv) for b in bits]
    keys = np.concatenate(parts) if parts else np.empty(0, np.int64)
    keys, counts = np.unique(keys, return_counts=True)
    edges = np.stack([keys // max(nv, 1), keys % max(nv, 1)], axis=1) if len(keys) else np.empty((0, 2), np.int64)
    indptr, indices = csr_from_edges(nv, edges)
    return LocalOptimaNetwork(
        node_count=nv, edges=edges, indptr=indptr, indices=indices,
        fitness=basins.fitness, basin_sizes=basins.basin_sizes, configs=basins.configs,
        boundary_counts=counts.astype(np.int64))


def export_edges(lon: LocalOptimaNetwork) -> str:
    """``edges.csv`` text: header ``src_id,dst_id``, rows sorted, ``src_id < dst_id``."""
    lines = ["src_id,dst_id"]
    lines.extend(f"{int(a)},{int(b)}" for a, b in lon.edges)
    return "\n".join(lines) + "\n"


def write_edges_csv(path: str | os.PathLike, lon: LocalOptimaNetwork) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(export_edges(lon))


def parse_edges(text: str) -> set[tuple[int, int]]:
    """Inverse of :func:`export_edges`."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "src_id,dst_id":
        raise ValueError("missing edges.csv header")
    out = set()
    for line in lines[1:]:
        if line.strip():
            a, b = line.split(",")
            out.add((int(a), int(b)))
    return out
