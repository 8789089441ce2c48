"""Basin statistics and the log-linear regressions built on them.

All regressions are ordinary least squares of a natural-log quantity against a
linear one. Fits that cannot be formed raise :class:`DegenerateFitError`; the
report layer turns that into ``None``.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .basins import BasinMap, global_optimum
from .errors import DegenerateFitError
from .io import format_real
from .landscape import Landscape
from .lon import LocalOptimaNetwork
from .metrics import DegreeDistribution, cumulative_degree_distribution


@dataclass(frozen=True)
class RegressionFit:
    """``y = alpha + beta * x``; ``rho`` is None when y is constant."""

    rho: float | None
    alpha: float
    beta: float
    point_count: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BasinReport:
    global_opt_relative_size: float
    degree_distribution_fit: RegressionFit | None
    size_distribution_fit: RegressionFit | None
    fitness_size_fit: RegressionFit | None
    degree_size_fit: RegressionFit | None

    def to_dict(self) -> dict:
        return asdict(self)


def ols_fit(x: Sequence[float], y: Sequence[float]) -> RegressionFit:
    """Closed-form least squares with Pearson correlation.

    Sums run over the points in the order given.

    Raises:
        DegenerateFitError: fewer than two points, or all x equal (or numerically so).
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-D arrays of equal length")
    m = len(x)
    if m < 2:
        raise DegenerateFitError(f"need at least 2 points, got {m}")
    if np.all(x == x[0]):
        raise DegenerateFitError("x has zero variance")
    xm = math.fsum(x) / m
    ym = math.fsum(y) / m
    dx = x - xm
    dy = y - ym
    sxx = math.fsum(dx * dx)
    sxy = math.fsum(dx * dy)
    if sxx == 0.0:
        raise DegenerateFitError("x variance underflows to zero")
    if np.all(y == y[0]):
        return RegressionFit(rho=None, alpha=float(y[0]), beta=0.0, point_count=m)
    syy = math.fsum(dy * dy)
    beta = sxy / sxx
    prod = sxx * syy
    # separate roots only when the product under- or overflows
    denom = math.sqrt(prod) if 0.0 < prod < math.inf else math.sqrt(sxx) * math.sqrt(syy)
    rho = None if denom == 0.0 else max(-1.0, min(1.0, sxy / denom))
    return RegressionFit(rho=rho, alpha=ym - beta * xm, beta=beta, point_count=m)


def fit_degree_distribution(dist: DegreeDistribution) -> RegressionFit:
    """Regress ln(number of nodes with degree >= k) on k, for k = 0..max degree."""
    k = np.arange(len(dist.counts), dtype=np.float64)
    keep = dist.counts >= 1
    return ols_fit(k[keep], np.log(dist.counts[keep]))


def basin_size_counts(basins: BasinMap) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Distinct basin sizes (ascending), how many basins have each, and how many are at least that size."""
    sizes, counts = np.unique(basins.basin_sizes, return_counts=True)
    cumulative = np.cumsum(counts[::-1])[::-1]
    return sizes, counts, cumulative


def fit_basin_size_distribution(basins: BasinMap) -> RegressionFit:
    """Regress ln(number of basins of size >= s) on s over the distinct sizes."""
    sizes, _, cumulative = basin_size_counts(basins)
    return ols_fit(sizes.astype(np.float64), np.log(cumulative))


def fit_fitness_vs_size(basins: BasinMap) -> RegressionFit:
    """Regress ln(basin size) on optimum fitness."""
    return ols_fit(basins.fitness, np.log(basins.basin_sizes))


def fit_degree_vs_size(basins: BasinMap, lon: LocalOptimaNetwork) -> RegressionFit:
    """Regress ln(basin size) on network degree."""
    return ols_fit(lon.degrees.astype(np.float64), np.log(basins.basin_sizes))


def _maybe(fit, *args) -> RegressionFit | None:
    try:
        return fit(*args)
    except DegenerateFitError:
        return None


def basin_report(landscape: Landscape, basins: BasinMap, lon: LocalOptimaNetwork) -> BasinReport:
    if basins.n != landscape.n or lon.node_count != basins.optima_count:
        raise ValueError("landscape, basins and network are not from the same instance")
    best = global_optimum(basins)
    return BasinReport(
        global_opt_relative_size=best.basin_size / landscape.size,
        degree_distribution_fit=_maybe(fit_degree_distribution, cumulative_degree_distribution(lon)),
        size_distribution_fit=_maybe(fit_basin_size_distribution, basins),
        fitness_size_fit=_maybe(fit_fitness_vs_size, basins),
        degree_size_fit=_maybe(fit_degree_vs_size, basins, lon),
    )


def write_basin_sizes_csv(path: str | os.PathLike, basins: BasinMap) -> None:
    sizes, counts, cumulative = basin_size_counts(basins)
    with open(path, "w", newline="") as fh:
        fh.write("size,count,cumulative_count\n")
        for s, c, cc in zip(sizes, counts, cumulative):
            fh.write(f"{int(s)},{int(c)},{int(cc)}\n")


def write_fitness_size_csv(path: str | os.PathLike, lon: LocalOptimaNetwork) -> None:
    deg = lon.degrees
    with open(path, "w", newline="") as fh:
        fh.write("id,fitness,basin_size,degree\n")
        for i in range(lon.node_count):
            fh.write(f"{i},{format_real(lon.fitness[i])},{int(lon.basin_sizes[i])},{int(deg[i])}\n")
