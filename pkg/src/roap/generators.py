"""Seeded instance generators.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so a
given :class:`GenSpec` always yields the same instance.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .metric_path import MetricError, PathInstance, from_matrix, from_points

__all__ = ["GenSpec", "generate", "gen_euclidean", "gen_graph_completion", "paper_fig1", "MODELS"]

MODELS = ("euclidean", "graph")


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    seed: int = 0
    dim: int = 2
    extra_edges: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise MetricError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.n < 1:
            raise MetricError(f"n must be >= 1, got {self.n}")
        if self.model == "euclidean" and self.dim < 1:
            raise MetricError(f"dim must be >= 1, got {self.dim}")
        if self.model == "graph" and self.n < 2:
            raise MetricError("graph-completion instances need n >= 2")
        if self.extra_edges < 0:
            raise MetricError("extra_edges must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise MetricError("seed must fit in 64 bits")


def generate(spec: GenSpec) -> PathInstance:
    if spec.model == "euclidean":
        return gen_euclidean(spec)
    return gen_graph_completion(spec)


def gen_euclidean(spec: GenSpec) -> PathInstance:
    """n i.i.d. uniform points in [0, 1)^dim, visited in generation order."""
    rng = np.random.default_rng(spec.seed)
    return from_points(rng.random((spec.n, spec.dim)))


def completion_metric(n: int, path_lengths, chords) -> np.ndarray:
    """Shortest-path metric of a path with ``path_lengths`` plus ``chords``.

    ``chords`` is an iterable of (a, b, length) with 0-based a, b.
    """
    rows, cols, vals = [], [], []
    for k, length in enumerate(path_lengths):
        rows.append(k)
        cols.append(k + 1)
        vals.append(float(length))
    for a, b, length in chords:
        rows.append(a)
        cols.append(b)
        vals.append(float(length))
    # duplicate (a, b) entries would be summed by scipy; keep the shortest
    best: dict[tuple[int, int], float] = {}
    for a, b, v in zip(rows, cols, vals):
        key = (min(a, b), max(a, b))
        best[key] = min(v, best.get(key, np.inf))
    keys = list(best)
    g = coo_matrix(
        ([best[k] for k in keys], ([k[0] for k in keys], [k[1] for k in keys])), shape=(n, n)
    ).tocsr()
    d = shortest_path(g, method="D", directed=False)
    d = np.minimum(d, d.T)
    np.fill_diagonal(d, 0.0)
    return d


def gen_graph_completion(spec: GenSpec) -> PathInstance:
    """Path with edge lengths in [1, 2] plus random chords, closed under shortest paths.

    Chords join non-adjacent vertices a < b with a length drawn from
    [1, d_P(a, b)], so the resulting |v_a v_b| can sit well below the path
    distance.
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    lengths = rng.uniform(1.0, 2.0, size=n - 1)
    prefix = np.concatenate([[0.0], np.cumsum(lengths)])
    chords = []
    if n >= 3:
        for _ in range(spec.extra_edges):
            a = int(rng.integers(0, n - 2))
            b = int(rng.integers(a + 2, n))
            chords.append((a, b, rng.uniform(1.0, prefix[b] - prefix[a])))
    return from_matrix(completion_metric(n, lengths, chords))


def paper_fig1() -> PathInstance:
    """Ten vertices, unit path edges and |v_3 v_8| = 4, as a completion metric."""
    return from_matrix(completion_metric(10, [1.0] * 9, [(2, 7, 4.0)]))
