"""Brute-force reference answers.

Nothing here touches :mod:`roap.solver` or :mod:`roap.kernels`. Distances in
G(i, j) come from the three-route formula, and every :func:`brute_solve`
call re-derives the winning graph's distances with Dijkstra on the explicit
(n + 1)-edge graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import csgraph_from_dense, dijkstra

from .metric_path import MetricError, PathInstance, _check_edge, cycle_length

__all__ = [
    "OracleMismatch",
    "OracleResult",
    "aug_distance_matrix",
    "dijkstra_distance_matrix",
    "brute_radius",
    "brute_solve",
    "cycle_radius_discrete",
    "cycle_radius_diametral",
]

MAX_ORACLE_N = 200


class OracleMismatch(AssertionError):
    """The closed-form distances disagree with an explicit shortest-path run."""


@dataclass(frozen=True)
class OracleResult:
    i: int
    j: int
    center: int
    radius: float
    all_optimal_pairs: list[tuple[int, int]] | None = field(default=None)


def aug_distance_matrix(inst: PathInstance, i: int, j: int) -> np.ndarray:
    """All-pairs distances in G(i, j), shape (n, n)."""
    _check_edge(inst, i, j)
    p = inst.prefix
    w = inst.dist(i, j)
    du_i = np.abs(p - p[i - 1])
    du_j = np.abs(p - p[j - 1])
    direct = np.abs(p[:, None] - p[None, :])
    return np.minimum(direct, np.minimum((du_i[:, None] + du_j[None, :]) + w, (du_j[:, None] + du_i[None, :]) + w))


def dijkstra_distance_matrix(inst: PathInstance, i: int, j: int) -> np.ndarray:
    """All-pairs distances in G(i, j) by Dijkstra on an explicit adjacency."""
    _check_edge(inst, i, j)
    n = inst.n
    adj = np.full((n, n), np.inf)
    steps = np.diff(inst.prefix)
    idx = np.arange(n - 1)
    adj[idx, idx + 1] = steps
    adj[idx + 1, idx] = steps
    if i != j:
        w = inst.dist(i, j)
        a, b = i - 1, j - 1
        adj[a, b] = adj[b, a] = min(adj[a, b], w)
    graph = csgraph_from_dense(adj, null_value=np.inf)
    return dijkstra(graph, directed=False)


def _radius_of(dist: np.ndarray) -> tuple[float, int]:
    ecc = dist.max(axis=1)
    c = int(np.argmin(ecc))
    return float(ecc[c]), c + 1


def brute_radius(inst: PathInstance, i: int, j: int) -> tuple[float, int]:
    """(radius of G(i, j), smallest center), O(n^2)."""
    return _radius_of(aug_distance_matrix(inst, i, j))


def _batch_ecc_min(inst: PathInstance, i: int, js: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Radius and smallest center of G(i, j) for each j in ``js``."""
    p = inst.prefix
    w = inst.dist_row(i)[js - 1]                  # (m,)
    du_i = np.abs(p - p[i - 1])                   # (n,)
    du_j = np.abs(p[None, :] - p[js - 1][:, None])  # (m, n)
    direct = np.abs(p[:, None] - p[None, :])      # (n, n)
    route_a = (du_i[None, :, None] + du_j[:, None, :]) + w[:, None, None]
    route_b = (du_j[:, :, None] + du_i[None, None, :]) + w[:, None, None]
    dist = np.minimum(direct[None], np.minimum(route_a, route_b))
    ecc = dist.max(axis=2)
    centers = ecc.argmin(axis=1)
    return ecc[np.arange(len(js)), centers], centers + 1


def brute_solve(inst: PathInstance, collect_all: bool = False, chunk: int = 32, cross_check: bool = True) -> OracleResult:
    """Exhaustive optimum over every pair i <= j and every center.

    Ties resolve to the lexicographically smallest (i, j, center). With
    ``collect_all`` the result also lists every optimal pair.
    """
    n = inst.n
    if n == 1:
        return OracleResult(1, 1, 1, 0.0, [(1, 1)] if collect_all else None)
    best = (np.inf, 0, 0, 0)
    per_pair: list[tuple[float, int, int]] = []
    for i in range(1, n + 1):
        for start in range(i, n + 1, chunk):
            js = np.arange(start, min(start + chunk, n + 1))
            radii, centers = _batch_ecc_min(inst, i, js)
            b = int(np.argmin(radii))
            if radii[b] < best[0]:
                best = (float(radii[b]), i, int(js[b]), int(centers[b]))
            if collect_all:
                per_pair.extend((float(r), i, int(j)) for r, j in zip(radii, js))
    radius, bi, bj, bc = best
    if cross_check:
        closed = aug_distance_matrix(inst, bi, bj)
        explicit = dijkstra_distance_matrix(inst, bi, bj)
        if not np.allclose(closed, explicit, rtol=1e-9, atol=1e-12):
            bad = np.argwhere(~np.isclose(closed, explicit, rtol=1e-9, atol=1e-12))[0]
            raise OracleMismatch(
                f"G({bi},{bj}) distance v{bad[0] + 1}-v{bad[1] + 1}: "
                f"formula {closed[tuple(bad)]} vs dijkstra {explicit[tuple(bad)]}"
            )
    pairs = [(i, j) for r, i, j in per_pair if r == radius] if collect_all else None
    return OracleResult(bi, bj, bc, radius, pairs)


def _cycle_dist(inst: PathInstance, i: int, j: int):
    p = inst.prefix[i - 1 : j]
    total = cycle_length(inst, i, j)
    along = np.abs(p[:, None] - p[None, :])
    return np.minimum(along, total - along), p - p[0], total


def cycle_radius_discrete(inst: PathInstance, i: int, j: int) -> tuple[float, int]:
    """Discrete radius of the cycle C(i, j) and its smallest center, by min-max enumeration."""
    if not i < j:
        raise MetricError(f"cycle C({i}, {j}) needs i < j")
    d, _, _ = _cycle_dist(inst, i, j)
    r, c = _radius_of(d)
    return r, c + i - 1


def cycle_radius_diametral(inst: PathInstance, i: int, j: int) -> tuple[float, int]:
    """Same quantity through diametral points.

    Walking |C|/2 from v_k along the cycle lands on an edge (a, b); the
    farthest cycle vertex from v_k is a or b, so l_k = max(d_C(k, a),
    d_C(k, b)) and the radius is min_k l_k. A landing exactly on a vertex
    uses that vertex for both ends.
    """
    if not i < j:
        raise MetricError(f"cycle C({i}, {j}) needs i < j")
    d, pos, total = _cycle_dist(inst, i, j)
    m = len(pos)
    half = total / 2.0
    ls = np.empty(m)
    for k in range(m):
        t = pos[k] + half
        if t >= total:
            t -= total
        if t > pos[-1]:
            a, b = m - 1, 0  # on the added edge
        else:
            b = int(np.searchsorted(pos, t, side="left"))
            a = b if pos[b] == t else b - 1
        ls[k] = max(d[k, a], d[k, b])
    c = int(np.argmin(ls))
    return float(ls[c]), c + i
