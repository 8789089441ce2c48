"""Network statistics of local optima networks.

Undefined statistics (no edges, fewer than two nodes, zero degree variance)
are returned as ``None`` rather than a numeric stand-in.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .io import format_real
from .lon import LocalOptimaNetwork


@dataclass(frozen=True)
class NetworkStats:
    n_v: int
    n_e: int
    mean_degree: float | None
    clustering: float | None
    clustering_random: float | None
    mean_path_length: float | None
    assortativity: float | None
    component_count: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class DegreeDistribution:
    """Degree sequence and its complementary cumulative distribution.

    ``counts[k]`` is the number of nodes with degree >= ``k`` for
    ``k = 0..max_degree``; ``cumulative`` is the same as a fraction.
    """

    degrees: np.ndarray
    counts: np.ndarray

    @property
    def cumulative(self) -> np.ndarray:
        return self.counts / len(self.degrees)

    @property
    def max_degree(self) -> int:
        return len(self.counts) - 1


def local_clustering(lon: LocalOptimaNetwork) -> np.ndarray:
    """Per-node ``2 E_i / (k_i (k_i - 1))``; nodes of degree < 2 get 0."""
    deg = lon.degrees
    tri = _kernels.triangle_counts(lon.indptr, lon.indices, lon.node_count)
    out = np.zeros(lon.node_count)
    ok = deg >= 2
    out[ok] = 2.0 * tri[ok] / (deg[ok] * (deg[ok] - 1.0))
    return out


def clustering_coefficient(lon: LocalOptimaNetwork) -> float | None:
    """Average local clustering over all nodes, isolated and leaf nodes included."""
    if lon.node_count == 0:
        return None
    return float(np.mean(local_clustering(lon)))


def component_count(lon: LocalOptimaNetwork) -> int:
    if lon.node_count == 0:
        return 0
    adj = csr_matrix((np.ones(len(lon.indices), dtype=np.int8), lon.indices, lon.indptr),
                     shape=(lon.node_count, lon.node_count))
    return int(connected_components(adj, directed=False)[0])


def mean_path_length(lon: LocalOptimaNetwork) -> float | None:
    """Mean BFS distance over connected pairs of distinct nodes.

    Pairs in different components are left out of the average; see
    :func:`component_count` for how many components there are.
    """
    if lon.node_count < 2:
        return None
    total, pairs = _kernels.distance_totals(lon.indptr, lon.indices, lon.node_count)
    if pairs == 0:
        return None
    return int(total) / int(pairs)


def assortativity(lon: LocalOptimaNetwork) -> float | None:
    """Degree correlation across edges, each edge counted in both directions.

    Computed from integer degree sums, so the zero-variance test (regular
    graphs) is exact.
    """
    m = lon.edge_count
    if m == 0:
        return None
    deg = lon.degrees.astype(np.int64)
    j = deg[lon.edges[:, 0]]
    k = deg[lon.edges[:, 1]]
    s_jk = int(np.dot(j, k))
    s_sum = int(j.sum()) + int(k.sum())
    s_sq = int(np.dot(j, j)) + int(np.dot(k, k))
    # numerator and denominator scaled by 4 m^2
    num = 4 * m * s_jk - s_sum * s_sum
    den = 2 * m * s_sq - s_sum * s_sum
    if den == 0:
        return None
    return max(-1.0, min(1.0, num / den))


def cumulative_degree_distribution(lon: LocalOptimaNetwork) -> DegreeDistribution:
    deg = lon.degrees
    hist = np.bincount(deg, minlength=1)
    counts = np.cumsum(hist[::-1])[::-1].astype(np.int64)
    return DegreeDistribution(degrees=deg, counts=counts)


def network_stats(lon: LocalOptimaNetwork) -> NetworkStats:
    n_v, n_e = lon.node_count, lon.edge_count
    z = 2.0 * n_e / n_v if n_v else None
    return NetworkStats(
        n_v=n_v,
        n_e=n_e,
        mean_degree=z,
        clustering=clustering_coefficient(lon),
        clustering_random=z / n_v if n_v else None,
        mean_path_length=mean_path_length(lon),
        assortativity=assortativity(lon),
        component_count=component_count(lon),
    )


def write_degree_csv(path: str | os.PathLike, dist: DegreeDistribution) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("k,count,fraction\n")
        frac = dist.cumulative
        for k, c in enumerate(dist.counts):
            fh.write(f"{k},{int(c)},{format_real(frac[k])}\n")
