"""Map every configuration to the local optimum its hill climb reaches.

Best-improvement search moves to the best neighbor while that is a strict
improvement. Doing this from all 2^N starts partitions the space into basins.

    python3 demos/02_basins.py
"""

import numpy as np

from lonlab import compute_basins, global_optimum, local_search, make_landscape

land = make_landscape(n=14, k=4, seed=3)
basins = compute_basins(land)

print(f"{basins.optima_count} local optima in a space of {land.size} configurations")
assert basins.basin_sizes.sum() == land.size

best = global_optimum(basins)
print(f"global optimum {best.config:014b}: fitness {best.fitness:.4f}, basin {best.basin_size} "
      f"({best.basin_size / land.size:.1%} of the space)")

# A single climb lands exactly where the basin map says it should.
start = 12345
end = local_search(land, start)
assert basins.configs[basins.assignment[start]] == end
print(f"climb from {start:014b} ends at {end:014b}")

# Fitter optima tend to own larger basins.
order = np.argsort(basins.fitness)[::-1][:5]
for i in order:
    print(f"  optimum {i:4d}: fitness {basins.fitness[i]:.4f}  basin size {basins.basin_sizes[i]}")
