"""NK landscapes under the adjacent (circular successor window) neighborhood model.

A configuration is an ``n``-bit unsigned integer; bit ``i`` (least significant
first) is the value of gene ``i``. Gene ``i`` reads the ``k + 1`` genes
``i, i+1, ..., i+k`` (mod ``n``), packed into a context index whose bit ``m``
is gene ``(i + m) mod n``. Fitness is the mean of the per-gene contributions.

Contribution tables are generated by a counter-based splitmix64 construction so
that any implementation can regenerate the same instance from ``(n, k, seed)``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidParametersError

MODEL_ADJACENT = "adjacent"
# Reserved; the random neighborhood model is not implemented.
MODEL_RANDOM = "random"
MODELS = (MODEL_ADJACENT, MODEL_RANDOM)

DESCRIPTOR_MODEL = "nk-adjacent"

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
GENE_STRIDE = 0x9E3779B97F4A7C15
CONTEXT_STRIDE = 0xC2B2AE3D27D4EB4F


def splitmix64(x):
    """Apply the splitmix64 step (gamma add, two xor-shift-multiplies, final xor-shift).

    Accepts a Python int or a ``uint64`` array; arithmetic wraps modulo 2**64.
    """
    if isinstance(x, (int, np.integer)):
        z = (int(x) + GOLDEN_GAMMA) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)
    z = np.asarray(x, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = z + np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def unit(h):
    """Map 64-bit hashes to doubles in [0, 1) using the top 53 bits."""
    if isinstance(h, (int, np.integer)):
        return (int(h) >> 11) / 9007199254740992.0
    return (np.asarray(h, dtype=np.uint64) >> np.uint64(11)).astype(np.float64) / 9007199254740992.0


def contribution_tables(n: int, k: int, seed: int) -> np.ndarray:
    """Generate the ``(n, 2**(k+1))`` contribution table for an instance."""
    width = 1 << (k + 1)
    genes = np.arange(n, dtype=np.uint64)[:, None]
    contexts = np.arange(width, dtype=np.uint64)[None, :]
    with np.errstate(over="ignore"):
        counters = genes * np.uint64(GENE_STRIDE) + contexts * np.uint64(CONTEXT_STRIDE)
    return unit(splitmix64(np.uint64(seed & MASK64) ^ counters))


@dataclass(frozen=True, eq=False)
class Landscape:
    """An immutable NK instance.

    Attributes:
        n: Number of genes.
        k: Number of other genes each gene's contribution depends on.
        seed: 64-bit instance seed. ``None`` for landscapes built from injected tables.
        tables: Read-only ``(n, 2**(k+1))`` array of contributions in [0, 1).
        model: Neighborhood model tag; only ``"adjacent"`` is supported.
    """

    n: int
    k: int
    seed: int | None
    tables: np.ndarray = field(repr=False)
    model: str = MODEL_ADJACENT

    @property
    def size(self) -> int:
        return 1 << self.n

    def context_indices(self, configs: np.ndarray, gene: int) -> np.ndarray:
        """Vectorized :func:`context_index` over an array of configurations."""
        configs = np.asarray(configs, dtype=np.int64)
        ctx = np.zeros(configs.shape, dtype=np.int64)
        for m in range(self.k + 1):
            ctx |= ((configs >> ((gene + m) % self.n)) & 1) << m
        return ctx

    def fitness_of(self, configs: np.ndarray) -> np.ndarray:
        """Fitness of each configuration in ``configs``.

        Contributions are accumulated gene by gene in ascending order and then
        divided by ``n``, the same operation order as :func:`eval_fitness`, so
        the results are bit-identical to the scalar path.
        """
        configs = np.asarray(configs, dtype=np.int64)
        acc = np.zeros(configs.shape, dtype=np.float64)
        for gene in range(self.n):
            acc += self.tables[gene][self.context_indices(configs, gene)]
        return acc / self.n

    def fitness_vector(self) -> np.ndarray:
        """Fitness of all ``2**n`` configurations, indexed by configuration."""
        return self.fitness_of(np.arange(self.size, dtype=np.int64))

    def to_descriptor(self, include_tables: bool = False) -> dict:
        desc = {"model": DESCRIPTOR_MODEL, "n": self.n, "k": self.k, "seed": self.seed}
        if include_tables or self.seed is None:
            desc["tables"] = self.tables.tolist()
        return desc


def _check_params(n: int, k: int, model: str) -> None:
    if model not in MODELS:
        raise InvalidParametersError(f"unknown neighborhood model {model!r}")
    if model != MODEL_ADJACENT:
        raise InvalidParametersError(f"neighborhood model {model!r} is not implemented")
    if n < 1:
        raise InvalidParametersError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise InvalidParametersError(f"k must satisfy 0 <= k <= n-1, got n={n}, k={k}")


def _freeze(tables: np.ndarray) -> np.ndarray:
    tables = np.array(tables, dtype=np.float64)
    tables.setflags(write=False)
    return tables


def make_landscape(n: int, k: int, seed: int, model: str = MODEL_ADJACENT) -> Landscape:
    """Build the NK instance determined by ``(n, k, seed)``.

    Raises:
        InvalidParametersError: if ``n < 1`` or ``k`` is outside ``[0, n-1]``.
    """
    _check_params(n, k, model)
    if not 0 <= seed <= MASK64:
        raise InvalidParametersError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return Landscape(n=n, k=k, seed=seed, tables=_freeze(contribution_tables(n, k, seed)), model=model)


def landscape_from_tables(tables: Sequence[Sequence[float]], k: int | None = None) -> Landscape:
    """Build a landscape from explicit contribution tables (test fixtures).

    ``k`` is inferred from the row width when omitted.
    """
    arr = np.asarray(tables, dtype=np.float64)
    if arr.ndim != 2:
        raise InvalidParametersError("tables must be a 2-D array")
    n, width = arr.shape
    inferred = width.bit_length() - 2
    if width < 2 or width != 1 << (inferred + 1):
        raise InvalidParametersError(f"table rows must have 2**(k+1) entries, got {width}")
    if k is not None and k != inferred:
        raise InvalidParametersError(f"k={k} inconsistent with table width {width}")
    _check_params(n, inferred, MODEL_ADJACENT)
    return Landscape(n=n, k=inferred, seed=None, tables=_freeze(arr))


def context_index(landscape: Landscape, config: int, gene: int) -> int:
    """Pack genes ``gene, gene+1, ..., gene+k`` (mod n) of ``config`` into an integer."""
    n = landscape.n
    if not 0 <= gene < n:
        raise IndexError(f"gene {gene} out of range for n={n}")
    ctx = 0
    for m in range(landscape.k + 1):
        ctx |= ((config >> ((gene + m) % n)) & 1) << m
    return ctx


def eval_fitness(landscape: Landscape, config: int) -> float:
    """Mean contribution of all genes for one configuration."""
    if not 0 <= config < landscape.size:
        raise ValueError(f"configuration {config} out of range for n={landscape.n}")
    acc = 0.0
    for gene in range(landscape.n):
        acc += float(landscape.tables[gene, context_index(landscape, config, gene)])
    return acc / landscape.n


def neighbors(config: int, n: int) -> list[int]:
    """The ``n`` one-bit-flip neighbors of ``config``, by ascending flipped bit."""
    return [config ^ (1 << i) for i in range(n)]


def neutral_pairs(landscape: Landscape, fitness: np.ndarray | None = None) -> int:
    """Count Hamming-1 pairs with exactly equal fitness.

    NK landscapes with continuous contributions are expected to return 0.
    """
    if fitness is None:
        fitness = landscape.fitness_vector()
    idx = np.arange(landscape.size, dtype=np.int64)
    count = 0
    for i in range(landscape.n):
        lower = idx[(idx >> i) & 1 == 0]
        count += int(np.count_nonzero(fitness[lower] == fitness[lower | (1 << i)]))
    return count


def save_landscape(landscape: Landscape, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        json.dump(landscape.to_descriptor(), fh)
        fh.write("\n")


def landscape_from_descriptor(desc: dict) -> Landscape:
    if desc.get("model") != DESCRIPTOR_MODEL:
        raise InvalidParametersError(f"unsupported landscape model {desc.get('model')!r}")
    try:
        n, k = int(desc["n"]), int(desc["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParametersError(f"malformed landscape descriptor: {exc}") from None
    if desc.get("tables") is not None:
        land = landscape_from_tables(desc["tables"], k=k)
        if land.n != n:
            raise InvalidParametersError(f"descriptor n={n} but tables have {land.n} rows")
        return land
    if desc.get("seed") is None:
        raise InvalidParametersError("landscape descriptor needs a seed or tables")
    return make_landscape(n, k, int(desc["seed"]))


def load_landscape(path: str | os.PathLike) -> Landscape:
    with open(path) as fh:
        return landscape_from_descriptor(json.load(fh))
