"""Per-instance pipelines, multi-instance sweeps and ensemble aggregation.

Output layout for a sweep rooted at ``out``::

    out/<n>_<k>_<seed>/report.json      one InstanceReport (byte-stable)
    out/<n>_<k>_<seed>/timing.json      wall-clock duration (not byte-stable)
    out/<n>_<k>_<seed>/{nodes,edges,degree_cumulative,basin_sizes,fitness_size}.csv
    out/aggregate.csv                   network statistics per (n, k)
    out/table2_degree_fit.csv, table3_basin_size_fit.csv,
    out/table4_fitness_size_fit.csv, degree_size_fit.csv, global_optimum.csv
    out/aggregate.json                  every metric with mean, std and exclusions
"""

from __future__ import annotations

import json
import logging
import math
import os
import shutil
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .basin_stats import BasinReport, basin_report, write_basin_sizes_csv, write_fitness_size_csv
from .basins import DEFAULT_MAX_EXHAUSTIVE_N, check_capacity, compute_basins, write_nodes_csv
from .landscape import Landscape, make_landscape, neutral_pairs
from .lon import build_lon, write_edges_csv
from .metrics import NetworkStats, cumulative_degree_distribution, network_stats, write_degree_csv

log = logging.getLogger(__name__)

INSTANCE_FILES = ("report.json", "nodes.csv", "edges.csv", "degree_cumulative.csv",
                  "basin_sizes.csv", "fitness_size.csv")

FIT_FIELDS = ("degree_distribution_fit", "size_distribution_fit", "fitness_size_fit", "degree_size_fit")


@dataclass
class InstanceReport:
    n: int
    k: int
    seed: int | None
    stats: NetworkStats
    basins: BasinReport
    neutral_pairs: int
    duration: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        """Frozen JSON layout; undefined values are None. Duration is excluded."""
        out = {"n": self.n, "k": self.k, "seed": self.seed, "model": "nk-adjacent"}
        out.update(self.stats.to_dict())
        out["global_opt_relative_size"] = self.basins.global_opt_relative_size
        for name in FIT_FIELDS:
            fit = getattr(self.basins, name)
            out[name] = None if fit is None else fit.to_dict()
        out["neutral_pairs"] = self.neutral_pairs
        return out


def flatten_report(report: dict) -> dict[str, float | None]:
    """Numeric metrics of a report dict keyed like ``clustering`` or ``fitness_size_fit.beta``."""
    flat: dict[str, float | None] = {}
    for key in ("n_v", "n_e", "mean_degree", "clustering", "clustering_random", "mean_path_length",
                "assortativity", "component_count", "global_opt_relative_size"):
        flat[key] = report[key]
    for name in FIT_FIELDS:
        fit = report[name]
        for part in ("rho", "alpha", "beta"):
            flat[f"{name}.{part}"] = None if fit is None else fit[part]
    return flat


def analyze_landscape(landscape: Landscape, threads: int = 1,
                      max_exhaustive_n: int = DEFAULT_MAX_EXHAUSTIVE_N):
    """Run basins, network, statistics and basin report for one instance.

    Returns ``(report, basins, lon)``.
    """
    check_capacity(landscape.n, max_exhaustive_n)
    t0 = time.perf_counter()
    fitness = landscape.fitness_vector()
    basins = compute_basins(landscape, threads=threads, max_exhaustive_n=max_exhaustive_n, fitness=fitness)
    lon = build_lon(basins, threads=threads)
    stats = network_stats(lon)
    breport = basin_report(landscape, basins, lon)
    ties = neutral_pairs(landscape, fitness)
    if ties:
        log.warning("n=%d k=%d seed=%s: %d neighboring pairs with equal fitness",
                    landscape.n, landscape.k, landscape.seed, ties)
    report = InstanceReport(landscape.n, landscape.k, landscape.seed, stats, breport, ties,
                            duration=time.perf_counter() - t0)
    return report, basins, lon


def write_instance(out_dir: str | os.PathLike, report: InstanceReport, basins, lon) -> None:
    """Write all instance files into ``out_dir``, replacing it as a unit.

    Files are staged in a sibling temporary directory; nothing is left behind
    if writing fails.
    """
    out_dir = Path(out_dir)
    out_dir.parent.mkdir(parents=True, exist_ok=True)
    stage = Path(tempfile.mkdtemp(prefix=f".{out_dir.name}.", dir=out_dir.parent))
    try:
        io.write_json(stage / "report.json", report.to_dict())
        write_nodes_csv(stage / "nodes.csv", basins, lon.degrees)
        write_edges_csv(stage / "edges.csv", lon)
        write_degree_csv(stage / "degree_cumulative.csv", cumulative_degree_distribution(lon))
        write_basin_sizes_csv(stage / "basin_sizes.csv", basins)
        write_fitness_size_csv(stage / "fitness_size.csv", lon)
        io.write_json(stage / "timing.json", {"duration_seconds": report.duration})
        if out_dir.exists():
            shutil.rmtree(out_dir)
        os.replace(stage, out_dir)
    except BaseException:
        shutil.rmtree(stage, ignore_errors=True)
        raise


def analyze(landscape: Landscape, out_dir: str | os.PathLike, threads: int = 1,
            max_exhaustive_n: int = DEFAULT_MAX_EXHAUSTIVE_N) -> InstanceReport:
    report, basins, lon = analyze_landscape(landscape, threads, max_exhaustive_n)
    write_instance(out_dir, report, basins, lon)
    return report


def instance_dirname(n: int, k: int, seed: int) -> str:
    return f"{n}_{k}_{seed}"


# ---------------------------------------------------------------- aggregation


@dataclass(frozen=True)
class MetricSummary:
    mean: float | None
    std: float | None
    count: int
    excluded: int


@dataclass
class AggregateReport:
    """Ensemble mean and sample standard deviation per metric for one (n, k).

    With a single instance the std is reported as 0 and ``single_instance`` is set.
    """

    n: int
    k: int
    instance_count: int
    metrics: dict[str, MetricSummary]
    single_instance: bool = False

    def mean(self, name: str) -> float | None:
        return self.metrics[name].mean

    def std(self, name: str) -> float | None:
        return self.metrics[name].std

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "instance_count": self.instance_count,
            "single_instance": self.single_instance,
            "metrics": {name: {"mean": m.mean, "std": m.std, "count": m.count, "excluded": m.excluded}
                        for name, m in self.metrics.items()},
        }


def summarize(values: list[float | None]) -> MetricSummary:
    defined = [float(v) for v in values if v is not None]
    excluded = len(values) - len(defined)
    if not defined:
        return MetricSummary(None, None, 0, excluded)
    mean = math.fsum(defined) / len(defined)
    if len(defined) == 1:
        return MetricSummary(mean, 0.0, 1, excluded)
    var = math.fsum((v - mean) ** 2 for v in defined) / (len(defined) - 1)
    return MetricSummary(mean, math.sqrt(var), len(defined), excluded)


def aggregate(reports: list[dict]) -> AggregateReport:
    """Aggregate report dicts (as written to ``report.json``) sharing one (n, k)."""
    if not reports:
        raise ValueError("nothing to aggregate")
    keys = {(r["n"], r["k"]) for r in reports}
    if len(keys) != 1:
        raise ValueError(f"reports mix several (n, k) pairs: {sorted(keys)}")
    flats = [flatten_report(r) for r in reports]
    metrics = {name: summarize([f[name] for f in flats]) for name in flats[0]}
    n, k = keys.pop()
    return AggregateReport(n, k, len(reports), metrics, single_instance=len(reports) == 1)


TABLE1_COLUMNS = [
    ("n_v", "n_v", True), ("n_e", "n_e", True), ("C", "clustering", True),
    ("Cr", "clustering_random", False), ("z", "mean_degree", True),
    ("l", "mean_path_length", True), ("a", "assortativity", True),
]


def _cell(x: float | None) -> str:
    return io.format_real(x)


def write_table1(path: Path, aggs: list[AggregateReport]) -> None:
    header = ["n", "k"]
    for short, _, with_std in TABLE1_COLUMNS:
        header.append(f"{short}_mean")
        if with_std:
            header.append(f"{short}_std")
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for agg in aggs:
            row = [str(agg.n), str(agg.k)]
            for _, name, with_std in TABLE1_COLUMNS:
                row.append(_cell(agg.mean(name)))
                if with_std:
                    row.append(_cell(agg.std(name)))
            fh.write(",".join(row) + "\n")


def write_fit_table(path: Path, aggs: list[AggregateReport], fit: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("n,k,count,rho_mean,rho_std,alpha_mean,alpha_std,beta_mean,beta_std,excluded\n")
        for agg in aggs:
            row = [str(agg.n), str(agg.k), str(agg.metrics[f"{fit}.beta"].count)]
            for part in ("rho", "alpha", "beta"):
                m = agg.metrics[f"{fit}.{part}"]
                row += [_cell(m.mean), _cell(m.std)]
            row.append(str(agg.metrics[f"{fit}.beta"].excluded))
            fh.write(",".join(row) + "\n")


def write_global_optimum_table(path: Path, aggs: list[AggregateReport]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("n,k,relative_size_mean,relative_size_std\n")
        for agg in aggs:
            m = agg.metrics["global_opt_relative_size"]
            fh.write(f"{agg.n},{agg.k},{_cell(m.mean)},{_cell(m.std)}\n")


def write_aggregates(out_dir: str | os.PathLike, aggs: list[AggregateReport]) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_table1(out / "aggregate.csv", aggs)
    write_fit_table(out / "table2_degree_fit.csv", aggs, "degree_distribution_fit")
    write_fit_table(out / "table3_basin_size_fit.csv", aggs, "size_distribution_fit")
    write_fit_table(out / "table4_fitness_size_fit.csv", aggs, "fitness_size_fit")
    write_fit_table(out / "degree_size_fit.csv", aggs, "degree_size_fit")
    write_global_optimum_table(out / "global_optimum.csv", aggs)
    io.write_json(out / "aggregate.json", [a.to_dict() for a in aggs])


# ---------------------------------------------------------------------- sweep


@dataclass
class SweepResult:
    aggregates: list[AggregateReport]
    reports: dict[tuple[int, int], list[dict]]
    failures: list[tuple[int, int, int, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_one(args) -> tuple[int, int, int, dict | None, str | None]:
    n, k, seed, out_dir, max_n = args
    try:
        report = analyze(make_landscape(n, k, seed), Path(out_dir) / instance_dirname(n, k, seed),
                         max_exhaustive_n=max_n)
        log.info("n=%d k=%d seed=%d: %d optima, %d edges (%.2fs)",
                 n, k, seed, report.stats.n_v, report.stats.n_e, report.duration)
        return n, k, seed, report.to_dict(), None
    except Exception as exc:  # recorded; the sweep carries on
        log.error("n=%d k=%d seed=%d failed: %s", n, k, seed, exc)
        return n, k, seed, None, f"{type(exc).__name__}: {exc}"


def sweep(n_list, k_list, instances: int, base_seed: int, out_dir: str | os.PathLike,
          threads: int = 1, max_exhaustive_n: int = DEFAULT_MAX_EXHAUSTIVE_N) -> SweepResult:
    """Analyze ``instances`` seeds (``base_seed + i``) for every (n, k) and aggregate.

    ``k`` values not valid for a given ``n`` (``k > n - 1``) are skipped with a
    warning. Instances run in separate processes when ``threads > 1``; outputs
    do not depend on the level of parallelism.
    """
    if instances < 1:
        raise ValueError("instances must be >= 1")
    for n in n_list:
        check_capacity(n, max_exhaustive_n)
    jobs = []
    for n in n_list:
        for k in k_list:
            if not 0 <= k <= n - 1:
                log.warning("skipping k=%d for n=%d", k, n)
                continue
            jobs += [(n, k, base_seed + i, str(out_dir), max_exhaustive_n) for i in range(instances)]
    Path(out_dir).mkdir(parents=True, exist_ok=True)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(threads) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]

    reports: dict[tuple[int, int], list[dict]] = {}
    failures = []
    for n, k, seed, rep, err in results:
        reports.setdefault((n, k), [])
        if err is None:
            reports[(n, k)].append(rep)
        else:
            failures.append((n, k, seed, err))
    aggs = [aggregate(reps) for reps in reports.values() if reps]
    write_aggregates(out_dir, aggs)
    failure_file = Path(out_dir) / "failures.csv"
    if failures:
        with open(failure_file, "w", newline="") as fh:
            fh.write("n,k,seed,error\n")
            for n, k, seed, err in failures:
                fh.write(f"{n},{k},{seed},\"{err.replace(chr(34), chr(39))}\"\n")
    elif failure_file.exists():
        failure_file.unlink()
    return SweepResult(aggs, reports, failures)


def load_reports(out_dir: str | os.PathLike, n: int, k: int) -> list[dict]:
    """Read back every ``report.json`` of one (n, k) under a sweep directory."""
    found = []
    for path in sorted(Path(out_dir).glob(f"{n}_{k}_*/report.json")):
        with open(path) as fh:
            found.append(json.load(fh))
    return sorted(found, key=lambda r: r["seed"])
