"""A small reproducible ensemble sweep.

Each (N, K) gets several seeds; per-instance results are written to their own
directory and summarized in aggregate tables. The full-scale run is

    lonlab sweep --n 16 --k-list 2,4,6,8,10,12,14,15 --instances 30 --out runs/n16

This demo runs a reduced version:

    python3 demos/06_sweep.py [out_dir]
"""

import sys
import tempfile
from pathlib import Path

from lonlab import sweep

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="lonlab-sweep-"))
result = sweep(n_list=[12], k_list=[2, 5, 8, 11], instances=5, base_seed=1, out_dir=out)

for agg in result.aggregates:
    print(f"K={agg.k:2d}: n_v {agg.mean('n_v'):7.1f} ± {agg.std('n_v'):5.1f}   "
          f"C {agg.mean('clustering'):.3f}   "
          f"global basin {agg.mean('global_opt_relative_size'):.4f}")

print("failures:", result.failures or "none")
print("written:", sorted(p.name for p in out.iterdir() if p.is_file()))
