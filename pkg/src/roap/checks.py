"""Invariant checks shared by the test suite and ``roap verify``.

The scans here recompute table entries straight from their definitions, with
no binary search and no incremental pivot, so they can stand in judgement of
the kernels.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .metric_path import PathInstance, aug_distances_from, eccentricity
from .oracle import brute_solve
from .solver import Augmentation, LambdaTable, SweepTable, compute_lambda, compute_sweep, solve

RTOL = 1e-9


def close(a: float, b: float, rtol: float = RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1.0)


def lambda_scan(inst: PathInstance) -> tuple[np.ndarray, np.ndarray]:
    """min over j of max over k >= i of d_G(i,j)(v_i, v_k), by direct enumeration."""
    n = inst.n
    lam = np.empty(n - 1)
    jopt = np.empty(n - 1, dtype=np.int64)
    for i in range(1, n):
        vals = [aug_distances_from(inst, (i, j), i)[i - 1 :].max() for j in range(i, n + 1)]
        b = int(np.argmin(vals))
        lam[i - 1] = vals[b]
        jopt[i - 1] = i + b
    return lam, jopt


def lambda_reevaluate(inst: PathInstance, lt: LambdaTable) -> np.ndarray:
    """max over k >= i of d_G(i, j_i)(v_i, v_k) for the table's own j_i."""
    return np.array(
        [aug_distances_from(inst, (i, int(lt.jopt[i - 1])), i)[i - 1 :].max() for i in range(1, inst.n)]
    )


def _sweep_objective(inst: PathInstance, lam: float, i: int) -> np.ndarray:
    p = inst.prefix[:i]
    return np.maximum(p - inst.prefix[0], (inst.prefix[i - 1] - p) + lam)


def sweep_scan(inst: PathInstance, lt: LambdaTable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(k_i, c_i, r_i) from full scans over k in [1, i]; 1-based indices."""
    m = inst.n - 1
    kmax = np.empty(m, dtype=np.int64)
    center = np.empty(m, dtype=np.int64)
    radius = np.empty(m)
    p = inst.prefix
    for i in range(1, m + 1):
        lam = float(lt.lam[i - 1])
        ks = np.arange(1, i + 1)
        ok = (p[ks - 1] - p[0]) <= (p[i - 1] - p[ks - 1]) + lam
        kmax[i - 1] = ks[ok].max()
        f = _sweep_objective(inst, lam, i)
        c = int(np.argmin(f))
        center[i - 1] = c + 1
        radius[i - 1] = f[c]
    return kmax, center, radius


def monotone_violations(kmax: np.ndarray) -> list[int]:
    """1-based i with k_i > k_{i+1}."""
    return [int(p) + 1 for p in np.flatnonzero(np.diff(kmax) < 0)]


def lipschitz_violations(inst: PathInstance, lt: LambdaTable, rtol: float = RTOL) -> list[int]:
    """1-based i with lambda_i > d_P(v_i, v_{i+1}) + lambda_{i+1} beyond ``rtol``."""
    lam = lt.lam
    steps = np.diff(inst.prefix)[:-1]
    bound = steps + lam[1:]
    slack = lam[:-1] - bound
    tol = rtol * np.maximum(np.maximum(np.abs(lam[:-1]), np.abs(bound)), 1.0)
    return [int(p) + 1 for p in np.flatnonzero(slack > tol)]


def is_feasible(inst: PathInstance, aug: Augmentation, rtol: float = RTOL) -> bool:
    """Every vertex lies within ``aug.radius`` of the center (relative slack ``rtol``)."""
    if aug.i is None:
        return aug.radius >= 0.0
    ecc, _ = eccentricity(inst, aug.edge, aug.center)
    return ecc <= aug.radius + rtol * max(abs(aug.radius), 1.0)


@dataclass
class InstanceReport:
    """Outcome of every check on one instance; ``failures`` is empty on success."""

    n: int
    radius: float
    oracle_radius: float
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_instance(inst: PathInstance) -> InstanceReport:
    aug = solve(inst)
    orc = brute_solve(inst)
    rep = InstanceReport(inst.n, aug.radius, orc.radius)
    if not close(aug.radius, orc.radius):
        rep.failures.append(f"radius {aug.radius!r} != oracle {orc.radius!r}")
    if not is_feasible(inst, aug):
        rep.failures.append(f"infeasible {aug}")
    if inst.n >= 2:
        lt = compute_lambda(inst)
        st: SweepTable = compute_sweep(inst, lt)
        if bad := monotone_violations(st.kmax):
            rep.failures.append(f"k_i not monotone at i={bad[:5]}")
        if bad := lipschitz_violations(inst, lt):
            rep.failures.append(f"lambda Lipschitz bound broken at i={bad[:5]}")
    return rep
