"""Regressions on basin sizes, degrees and fitness.

All fits are ordinary least squares with Pearson correlation, on natural logs.

    python3 demos/05_basin_stats.py
"""

from lonlab import basin_report, build_lon, compute_basins, make_landscape, ols_fit
from lonlab.errors import DegenerateFitError

land = make_landscape(n=16, k=8, seed=2)
basins = compute_basins(land)
lon = build_lon(basins)
report = basin_report(land, basins, lon)

print(f"global optimum basin covers {report.global_opt_relative_size:.4%} of the space")
for name in ("degree_distribution_fit", "size_distribution_fit", "fitness_size_fit", "degree_size_fit"):
    fit = getattr(report, name)
    print(f"{name:24s} rho={fit.rho:+.3f} alpha={fit.alpha:+.3f} beta={fit.beta:+.5f} ({fit.point_count} points)")

# A separable landscape has one optimum, so every fit is undefined.
flat = make_landscape(16, 0, seed=2)
b0 = compute_basins(flat)
print("K=0 fits:", basin_report(flat, b0, build_lon(b0)).fitness_size_fit)

# Degenerate input is an error, not a NaN.
try:
    ols_fit([1.0, 1.0], [2.0, 3.0])
except DegenerateFitError as exc:
    print("degenerate:", exc)
