"""Metric path instances and closed-form distances on P, G(i, j) and C(i, j).

All public functions take 1-based vertex indices. Arrays stored on a
:class:`PathInstance` are 0-based.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

__all__ = [
    "MetricError",
    "MetricViolation",
    "PathInstance",
    "build",
    "from_points",
    "from_matrix",
    "validate_metric",
    "path_distance",
    "aug_distance",
    "aug_distances_from",
    "cycle_distance",
    "cycle_length",
    "eccentricity",
    "path_radius",
]


class MetricError(ValueError):
    """Raised for malformed instance input or out-of-range vertex indices."""


@dataclass(frozen=True)
class MetricViolation:
    """First violated metric axiom found by :func:`validate_metric`.

    ``kind`` is ``"triangle"`` (|v_i v_k| + |v_k v_j| < |v_i v_j|) or
    ``"identity"`` (zero distance between distinct vertices, then ``k == i``).
    Indices are 1-based; ``slack`` is the (negative) amount by which the
    inequality fails.
    """

    kind: str
    i: int
    k: int
    j: int
    slack: float

    def __str__(self) -> str:
        if self.kind == "identity":
            return f"|v{self.i} v{self.j}| = 0 for distinct vertices"
        return (
            f"triangle inequality violated at (i={self.i}, k={self.k}, j={self.j}): "
            f"|v{self.i}v{self.k}| + |v{self.k}v{self.j}| < |v{self.i}v{self.j}| "
            f"by {-self.slack:.6g}"
        )


@dataclass(frozen=True, eq=False)
class PathInstance:
    """Immutable path v_1..v_n embedded in a metric space.

    Exactly one of ``coords`` (shape ``(n, dim)``, Euclidean norm) or
    ``matrix`` (shape ``(n, n)``) backs the metric. ``prefix[k]`` is the
    path length from v_1 to v_{k+1}.
    """

    n: int
    prefix: np.ndarray
    coords: np.ndarray | None = None
    matrix: np.ndarray | None = None

    @property
    def kind(self) -> str:
        return "points" if self.coords is not None else "matrix"

    @property
    def dim(self) -> int | None:
        return None if self.coords is None else int(self.coords.shape[1])

    @property
    def total_length(self) -> float:
        return float(self.prefix[-1])

    def dist(self, i: int, j: int) -> float:
        """|v_i v_j| for 1-based i, j."""
        _check_index(self, i)
        _check_index(self, j)
        return self._dist0(i - 1, j - 1)

    def _dist0(self, a: int, b: int) -> float:
        if self.matrix is not None:
            return float(self.matrix[a, b])
        # fixed accumulation order; the jit kernels reproduce it bit for bit
        s = 0.0
        for x, y in zip(self.coords[a].tolist(), self.coords[b].tolist()):
            d = x - y
            s += d * d
        return math.sqrt(s)

    def dist_row(self, i: int) -> np.ndarray:
        """Vector of |v_i v_k| over all k (0-based positions), 1-based ``i``."""
        _check_index(self, i)
        a = i - 1
        if self.matrix is not None:
            return self.matrix[a].copy()
        diff = self.coords - self.coords[a]
        s = np.zeros(self.n)
        for col in range(diff.shape[1]):
            s += diff[:, col] * diff[:, col]
        return np.sqrt(s)

    def distance_matrix(self) -> np.ndarray:
        if self.matrix is not None:
            return self.matrix.copy()
        return np.vstack([self.dist_row(i) for i in range(1, self.n + 1)]) if self.n else np.zeros((0, 0))

    def reversed(self) -> "PathInstance":
        """The same metric with the vertex order v_n..v_1."""
        prefix = self.prefix[-1] - self.prefix[::-1]
        if self.matrix is not None:
            return _make(self.n, prefix, matrix=self.matrix[::-1, ::-1])
        return _make(self.n, prefix, coords=self.coords[::-1])

    def to_document(self) -> dict[str, Any]:
        if self.coords is not None:
            return {"kind": "points", "dim": self.dim, "coords": self.coords.tolist()}
        return {"kind": "matrix", "n": self.n, "d": self.matrix.tolist()}

    def digest(self) -> str:
        """sha256 of the canonical JSON form of :meth:`to_document`."""
        return document_digest(self.to_document())


def document_digest(doc: dict[str, Any]) -> str:
    text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


def _make(n, prefix, coords=None, matrix=None) -> PathInstance:
    return PathInstance(
        n=n,
        prefix=_readonly(prefix),
        coords=None if coords is None else _readonly(coords),
        matrix=None if matrix is None else _readonly(matrix),
    )


def from_points(coords: Sequence[Sequence[float]] | np.ndarray, dim: int | None = None) -> PathInstance:
    """Instance from n points in R^dim, path order = row order."""
    try:
        pts = np.asarray(coords, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise MetricError(f"coordinates are not a rectangular numeric array: {exc}") from None
    if pts.ndim == 1 and pts.size == 0:
        raise MetricError("need at least one point")
    if pts.ndim != 2:
        raise MetricError(f"coordinates must be a list of points, got array of shape {pts.shape}")
    n, d = pts.shape
    if n < 1:
        raise MetricError("need at least one point")
    if dim is not None and d != dim:
        raise MetricError(f"dimension mismatch: dim={dim} but points have {d} coordinates")
    if d < 1:
        raise MetricError("points must have at least one coordinate")
    if not np.all(np.isfinite(pts)):
        raise MetricError("coordinates must be finite")
    inst = _make(n, np.zeros(n), coords=pts)
    steps = np.array([inst._dist0(k, k + 1) for k in range(n - 1)])
    return _make(n, _prefix_from_steps(steps), coords=pts)


def from_matrix(d: Sequence[Sequence[float]] | np.ndarray, n: int | None = None) -> PathInstance:
    """Instance from an explicit symmetric distance matrix."""
    try:
        mat = np.asarray(d, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise MetricError(f"distance matrix is not a rectangular numeric array: {exc}") from None
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise MetricError(f"distance matrix must be square, got shape {mat.shape}")
    m = mat.shape[0]
    if m < 1:
        raise MetricError("need at least one vertex")
    if n is not None and n != m:
        raise MetricError(f"n={n} does not match a {m}x{m} matrix")
    if not np.all(np.isfinite(mat)):
        raise MetricError("distances must be finite")
    if np.any(mat < 0):
        a, b = np.argwhere(mat < 0)[0]
        raise MetricError(f"negative distance |v{a + 1} v{b + 1}| = {mat[a, b]}")
    diag = np.diagonal(mat)
    if np.any(diag != 0):
        a = int(np.flatnonzero(diag)[0])
        raise MetricError(f"nonzero diagonal entry |v{a + 1} v{a + 1}| = {diag[a]}")
    if not np.array_equal(mat, mat.T):
        a, b = np.argwhere(mat != mat.T)[0]
        raise MetricError(
            f"asymmetric matrix: |v{a + 1} v{b + 1}| = {mat[a, b]} but |v{b + 1} v{a + 1}| = {mat[b, a]}"
        )
    steps = mat[np.arange(m - 1), np.arange(1, m)]
    return _make(m, _prefix_from_steps(steps), matrix=mat)


def _prefix_from_steps(steps: np.ndarray) -> np.ndarray:
    prefix = np.zeros(len(steps) + 1)
    np.cumsum(steps, out=prefix[1:])
    return prefix


def build(doc: dict[str, Any]) -> PathInstance:
    """Instance from a parsed instance document (``kind`` = points | matrix)."""
    if not isinstance(doc, dict):
        raise MetricError("instance document must be a JSON object")
    kind = doc.get("kind")
    if kind == "points":
        if "coords" not in doc or "dim" not in doc:
            raise MetricError("points instance needs 'dim' and 'coords'")
        dim = doc["dim"]
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise MetricError(f"'dim' must be a positive integer, got {dim!r}")
        coords = doc["coords"]
        if not isinstance(coords, list) or any(not isinstance(p, list) or len(p) != dim for p in coords):
            raise MetricError(f"dimension mismatch: every point must have exactly {dim} coordinates")
        return from_points(coords, dim)
    if kind == "matrix":
        if "d" not in doc or "n" not in doc:
            raise MetricError("matrix instance needs 'n' and 'd'")
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise MetricError(f"'n' must be a positive integer, got {n!r}")
        return from_matrix(doc["d"], n)
    raise MetricError(f"unknown instance kind {kind!r}; expected 'points' or 'matrix'")


def validate_metric(inst: PathInstance, rtol: float = 1e-9) -> MetricViolation | None:
    """Exhaustive O(n^3) check of the metric axioms.

    Returns ``None`` when every axiom holds, otherwise the first violation in
    lexicographic (i, k, j) order. A triangle is reported only when it fails
    by more than ``rtol`` times the largest distance; shortest-path metrics
    built in floating point are otherwise flagged for rounding noise.
    """
    d = inst.distance_matrix()
    n = inst.n
    off = ~np.eye(n, dtype=bool)
    zero = (d == 0) & off
    if zero.any():
        a, b = np.argwhere(zero)[0]
        return MetricViolation("identity", int(a) + 1, int(a) + 1, int(b) + 1, 0.0)
    tol = rtol * float(d.max(initial=0.0))
    for i in range(n):
        # slack[k, j] = d[i,k] + d[k,j] - d[i,j]
        slack = d[i][:, None] + d - d[i][None, :]
        bad = slack < -tol
        if bad.any():
            k, j = np.argwhere(bad)[0]
            return MetricViolation("triangle", i + 1, int(k) + 1, int(j) + 1, float(slack[k, j]))
    return None


def _check_index(inst: PathInstance, *idx: int) -> None:
    for v in idx:
        if not 1 <= v <= inst.n:
            raise MetricError(f"vertex index {v} out of range [1, {inst.n}]")


def _check_edge(inst: PathInstance, i: int, j: int) -> None:
    _check_index(inst, i, j)
    if i > j:
        raise MetricError(f"edge ({i}, {j}) must satisfy i <= j")


def path_distance(inst: PathInstance, i: int, j: int) -> float:
    """d_P(v_i, v_j)."""
    _check_index(inst, i, j)
    p = inst.prefix
    return float(abs(p[j - 1] - p[i - 1]))


def aug_distance(inst: PathInstance, edge: tuple[int, int], u: int, k: int) -> float:
    """Shortest-path distance between v_u and v_k in G(i, j) = P + e(v_i, v_j).

    Minimum of the three simple routes: along P, or through the new edge in
    either direction.
    """
    i, j = edge
    _check_edge(inst, i, j)
    _check_index(inst, u, k)
    w = inst._dist0(i - 1, j - 1)
    p = inst.prefix
    pu, pk, pi, pj = p[u - 1], p[k - 1], p[i - 1], p[j - 1]
    direct = abs(pk - pu)
    # legs first, edge weight last: swapping u and k then gives the same bits
    via_ij = (abs(pi - pu) + abs(pk - pj)) + w
    via_ji = (abs(pj - pu) + abs(pk - pi)) + w
    return float(min(direct, via_ij, via_ji))


def aug_distances_from(inst: PathInstance, edge: tuple[int, int], u: int) -> np.ndarray:
    """Vector form of :func:`aug_distance` from v_u to every vertex (0-based positions)."""
    i, j = edge
    _check_edge(inst, i, j)
    _check_index(inst, u)
    w = inst._dist0(i - 1, j - 1)
    p = inst.prefix
    pu, pi, pj = p[u - 1], p[i - 1], p[j - 1]
    direct = np.abs(p - pu)
    via_ij = (abs(pi - pu) + np.abs(p - pj)) + w
    via_ji = (abs(pj - pu) + np.abs(p - pi)) + w
    return np.minimum(direct, np.minimum(via_ij, via_ji))


def cycle_length(inst: PathInstance, i: int, j: int) -> float:
    """|C(i, j)| = d_P(v_i, v_j) + |v_i v_j|."""
    _check_edge(inst, i, j)
    return float(inst.prefix[j - 1] - inst.prefix[i - 1]) + inst._dist0(i - 1, j - 1)


def cycle_distance(inst: PathInstance, edge: tuple[int, int], u: int, k: int) -> float:
    """Distance between v_u and v_k along the cycle C(i, j); needs i <= u, k <= j."""
    i, j = edge
    _check_edge(inst, i, j)
    for v in (u, k):
        if not i <= v <= j:
            raise MetricError(f"vertex {v} is not on the cycle C({i}, {j})")
    d = float(abs(inst.prefix[k - 1] - inst.prefix[u - 1]))
    return min(d, cycle_length(inst, i, j) - d)


def eccentricity(inst: PathInstance, edge: tuple[int, int], c: int) -> tuple[float, int]:
    """(max distance from v_c in G(i, j), smallest farthest vertex)."""
    dist = aug_distances_from(inst, edge, c)
    k = int(np.argmax(dist))
    return float(dist[k]), k + 1


def path_radius(inst: PathInstance) -> tuple[float, int]:
    """Discrete radius of P itself and its smallest center."""
    p = inst.prefix
    ecc = np.maximum(p - p[0], p[-1] - p)
    c = int(np.argmin(ecc))
    return float(ecc[c]), c + 1
