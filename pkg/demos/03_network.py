"""Connect optima whose basins touch: the local optima network.

Two optima share an edge when some pair of Hamming neighbors straddles their
basins. The result is undirected and unweighted.

    python3 demos/03_network.py
"""

import tempfile
from pathlib import Path

from lonlab import build_lon, compute_basins, make_landscape, parse_edges
from lonlab.lon import write_edges_csv

basins = compute_basins(make_landscape(n=12, k=5, seed=1))
lon = build_lon(basins)
print(f"{lon.node_count} nodes, {lon.edge_count} edges, mean degree {lon.degrees.mean():.2f}")

# How many boundary pairs support each edge.
print(f"boundary pairs per edge: min {lon.boundary_counts.min()}, max {lon.boundary_counts.max()}")

hub = int(lon.degrees.argmax())
print(f"best-connected optimum {hub} touches {lon.degrees[hub]} other basins")

# Edge lists round-trip through CSV.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "edges.csv"
    write_edges_csv(path, lon)
    assert parse_edges(path.read_text()) == {(int(a), int(b)) for a, b in lon.edges}
    print(path.read_text().splitlines()[:4])
