"""Exhaustive local optima networks and basin statistics for NK landscapes."""

from .basin_stats import (BasinReport, RegressionFit, basin_report, fit_basin_size_distribution,
                          fit_degree_distribution, fit_degree_vs_size, fit_fitness_vs_size, ols_fit)
from .basins import BasinMap, Optimum, compute_basins, global_optimum, local_search
from .errors import CapacityError, DegenerateFitError, InvalidParametersError, LonlabError
from .experiment import AggregateReport, InstanceReport, aggregate, analyze, analyze_landscape, sweep
from .landscape import (Landscape, context_index, eval_fitness, landscape_from_tables, load_landscape,
                        make_landscape, neighbors, save_landscape)
from .lon import LocalOptimaNetwork, build_lon, export_edges, parse_edges
from .metrics import (DegreeDistribution, NetworkStats, assortativity, clustering_coefficient,
                      cumulative_degree_distribution, mean_path_length, network_stats)

__version__ = "0.1.0"
