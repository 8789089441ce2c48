"""Small-world statistics of local optima networks as K grows.

Clustering stays well above that of a random graph with the same density,
while mean path length stays short.

    python3 demos/04_metrics.py
"""

import math

from lonlab import build_lon, compute_basins, cumulative_degree_distribution, make_landscape, network_stats

print(" K    n_v     n_e      C     C_r      l       a")
for k in (2, 4, 6, 8, 11, 13):
    s = network_stats(build_lon(compute_basins(make_landscape(14, k, seed=5))))
    path = f"{s.mean_path_length:.3f}" if s.mean_path_length is not None else "  -  "
    assort = f"{s.assortativity:+.4f}" if s.assortativity is not None else "   -   "
    print(f"{k:2d} {s.n_v:6d} {s.n_e:7d}  {s.clustering:.3f}  {s.clustering_random:.3f}  {path}  {assort}")
    if s.mean_path_length is not None:
        assert s.mean_path_length <= math.log(s.n_v) + 1

# The cumulative degree distribution decays roughly exponentially.
dist = cumulative_degree_distribution(build_lon(compute_basins(make_landscape(14, 8, seed=5))))
for k in range(0, dist.max_degree + 1, max(1, dist.max_degree // 6)):
    print(f"P(degree >= {k:3d}) = {dist.cumulative[k]:.3f}")
