"""Hot loops: the per-vertex lambda table and the monotone center sweep.

Each kernel exists twice, a numba ``@njit`` version and a vectorized numpy
version, and both produce bit-identical results (same float operations in
the same order). Setting ``ROAP_DISABLE_NUMBA=1`` before import, or running
without numba installed, routes :func:`lambda_table` and :func:`center_sweep`
to the numpy versions.

Kernels use 0-based positions throughout.
"""
from __future__ import annotations

import os

import numpy as np

__all__ = [
    "NUMBA_AVAILABLE",
    "USE_NUMBA",
    "backend",
    "lambda_table",
    "center_sweep",
    "lambda_table_numpy",
    "center_sweep_numpy",
    "lambda_table_numba",
    "center_sweep_numba",
]

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    NUMBA_AVAILABLE = False

_FLAG = os.environ.get("ROAP_DISABLE_NUMBA", "").strip().lower()
USE_NUMBA = NUMBA_AVAILABLE and _FLAG in ("", "0", "false", "no")


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _metric_args(coords, matrix):
    if matrix is not None:
        return np.zeros((0, 1)), np.ascontiguousarray(matrix), True
    return np.ascontiguousarray(coords), np.zeros((0, 0)), False


# ---------------------------------------------------------------------------
# numpy
# ---------------------------------------------------------------------------


def _dist_row_numpy(coords, matrix, a):
    if matrix is not None:
        return matrix[a]
    diff = coords - coords[a]
    s = np.zeros(coords.shape[0])
    for col in range(diff.shape[1]):
        s += diff[:, col] * diff[:, col]
    return np.sqrt(s)


def lambda_table_numpy(prefix, coords=None, matrix=None):
    """For every i < n-1: best far-endpoint j and the resulting max distance.

    For a fixed (i, j) the vertices k >= j are reached at increasing
    distance, so their worst case is k = n-1. On the cycle part k in [i, j]
    the distance is min(p[k] - p[i], w + p[j] - p[k]); the first term rises
    and the second falls, so the worst k sits at their crossing, located by
    binary search. The search runs for all j of one i at once.
    """
    p = np.asarray(prefix, dtype=np.float64)
    n = p.shape[0]
    lam = np.empty(n - 1)
    jopt = np.empty(n - 1, dtype=np.int64)
    pn = p[n - 1]
    for i in range(n - 1):
        pi = p[i]
        js = np.arange(i, n)
        pj = p[i:]
        w = _dist_row_numpy(coords, matrix, i)[i:]
        far = np.minimum(pn - pi, w + (pn - pj))
        # smallest t in [i, j] with p[t] - p[i] >= w + (p[j] - p[t]); j + 1 if none
        lo = np.full(js.shape, i)
        hi = js + 1
        active = lo < hi
        while active.any():
            mid = np.where(active, (lo + hi) // 2, i)
            pm = p[mid]
            up = (pm - pi) >= w + (pj - pm)
            hi = np.where(active & up, mid, hi)
            lo = np.where(active & ~up, mid + 1, lo)
            active = lo < hi
        t = lo
        left = np.where(t > i, p[np.maximum(t - 1, i)] - pi, -np.inf)
        right = np.where(t <= js, w + (pj - p[np.minimum(t, n - 1)]), -np.inf)
        val = np.maximum(far, np.maximum(left, right))
        b = int(np.argmin(val))
        lam[i] = val[b]
        jopt[i] = i + b
    return lam, jopt


def center_sweep_numpy(prefix, lam):
    """Pivot k_i, center c_i and radius r_i for every i < n-1.

    Plain Python loop; the sweep is linear and not worth vectorizing.
    """
    p = np.asarray(prefix, dtype=np.float64).tolist()
    lam_l = np.asarray(lam, dtype=np.float64).tolist()
    m = len(lam_l)
    kmax = np.empty(m, dtype=np.int64)
    center = np.empty(m, dtype=np.int64)
    radius = np.empty(m)
    p0 = p[0]
    k = 0
    for i in range(m):
        L = lam_l[i]
        pi = p[i]
        while k + 1 <= i and (p[k + 1] - p0) <= (pi - p[k + 1]) + L:
            k += 1
        # floating rounding can break k_{i-1} <= k_i; step back to stay exact
        while k > 0 and not (p[k] - p0) <= (pi - p[k]) + L:
            k -= 1
        c = k
        r = max(p[k] - p0, (pi - p[k]) + L)
        if k + 1 <= i:
            r2 = max(p[k + 1] - p0, (pi - p[k + 1]) + L)
            if r2 < r:
                c, r = k + 1, r2
        kmax[i] = k
        center[i] = c
        radius[i] = r
    return kmax, center, radius


# ---------------------------------------------------------------------------
# numba
# ---------------------------------------------------------------------------

if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _dist_jit(coords, matrix, use_matrix, a, b):
        if use_matrix:
            return matrix[a, b]
        s = 0.0
        for col in range(coords.shape[1]):
            d = coords[a, col] - coords[b, col]
            s += d * d
        return np.sqrt(s)

    @njit(cache=True)
    def _lambda_jit(p, coords, matrix, use_matrix):
        n = p.shape[0]
        lam = np.empty(n - 1)
        jopt = np.empty(n - 1, dtype=np.int64)
        pn = p[n - 1]
        for i in range(n - 1):
            pi = p[i]
            best = np.inf
            bj = i
            for j in range(i, n):
                w = _dist_jit(coords, matrix, use_matrix, i, j)
                pj = p[j]
                val = min(pn - pi, w + (pn - pj))
                lo = i
                hi = j + 1
                while lo < hi:
                    mid = (lo + hi) // 2
                    pm = p[mid]
                    if (pm - pi) >= w + (pj - pm):
                        hi = mid
                    else:
                        lo = mid + 1
                if lo > i:
                    left = p[lo - 1] - pi
                    if left > val:
                        val = left
                if lo <= j:
                    right = w + (pj - p[lo])
                    if right > val:
                        val = right
                if val < best:
                    best = val
                    bj = j
            lam[i] = best
            jopt[i] = bj
        return lam, jopt

    @njit(cache=True)
    def _sweep_jit(p, lam):
        m = lam.shape[0]
        kmax = np.empty(m, dtype=np.int64)
        center = np.empty(m, dtype=np.int64)
        radius = np.empty(m)
        p0 = p[0]
        k = 0
        for i in range(m):
            L = lam[i]
            pi = p[i]
            while k + 1 <= i and (p[k + 1] - p0) <= (pi - p[k + 1]) + L:
                k += 1
            while k > 0 and not (p[k] - p0) <= (pi - p[k]) + L:
                k -= 1
            c = k
            r = max(p[k] - p0, (pi - p[k]) + L)
            if k + 1 <= i:
                r2 = max(p[k + 1] - p0, (pi - p[k + 1]) + L)
                if r2 < r:
                    c = k + 1
                    r = r2
            kmax[i] = k
            center[i] = c
            radius[i] = r
        return kmax, center, radius

    def lambda_table_numba(prefix, coords=None, matrix=None):
        c, mat, use_matrix = _metric_args(coords, matrix)
        return _lambda_jit(np.ascontiguousarray(prefix, dtype=np.float64), c, mat, use_matrix)

    def center_sweep_numba(prefix, lam):
        return _sweep_jit(
            np.ascontiguousarray(prefix, dtype=np.float64),
            np.ascontiguousarray(lam, dtype=np.float64),
        )

else:  # pragma: no cover
    lambda_table_numba = lambda_table_numpy
    center_sweep_numba = center_sweep_numpy


if USE_NUMBA:
    lambda_table = lambda_table_numba
    center_sweep = center_sweep_numba
else:
    lambda_table = lambda_table_numpy
    center_sweep = center_sweep_numpy
