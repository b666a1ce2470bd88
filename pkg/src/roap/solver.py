"""Optimal single-edge augmentation of a metric path, discrete centers.

Two candidate configurations are computed: the center lies left of the new
edge (``CASE11``) or right of it (``CASE12``, solved by running the first
on the reversed path). Every other configuration reduces to one of these,
so the better candidate is optimal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .metric_path import MetricError, PathInstance

__all__ = [
    "CaseTag",
    "LambdaTable",
    "SweepTable",
    "Augmentation",
    "compute_lambda",
    "compute_sweep",
    "candidate_case11",
    "candidate_case12",
    "solve",
]


class CaseTag(str, enum.Enum):
    CASE11 = "Case11"
    CASE12 = "Case12"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True, eq=False)
class LambdaTable:
    """``lam[p]`` and ``jopt[p]`` describe vertex i = p + 1.

    ``lam[p]`` is the smallest achievable max distance from v_i to
    v_i..v_n when one edge (v_i, v_j), j >= i, is added; ``jopt[p]`` is
    the smallest 1-based j attaining it.
    """

    lam: np.ndarray
    jopt: np.ndarray


@dataclass(frozen=True, eq=False)
class SweepTable:
    """Per-vertex sweep results; position p describes i = p + 1, values 1-based."""

    kmax: np.ndarray
    center: np.ndarray
    radius: np.ndarray


@dataclass(frozen=True)
class Augmentation:
    """Edge (i, j) to add, a vertex center and the resulting radius.

    For a single-vertex path there is no edge: ``i`` and ``j`` are ``None``.
    """

    i: int | None
    j: int | None
    center: int
    radius: float
    case_tag: CaseTag

    @property
    def edge(self) -> tuple[int, int] | None:
        return None if self.i is None else (self.i, self.j)

    def as_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "center": self.center,
            "radius": self.radius,
            "case_tag": self.case_tag.value,
        }


def _need_two(inst: PathInstance) -> None:
    if inst.n < 2:
        raise MetricError(f"need at least 2 vertices, got n={inst.n}")


def compute_lambda(inst: PathInstance, kernel=None) -> LambdaTable:
    _need_two(inst)
    kernel = kernel or kernels.lambda_table
    lam, jopt = kernel(inst.prefix, inst.coords, inst.matrix)
    return LambdaTable(lam=np.asarray(lam), jopt=np.asarray(jopt) + 1)


def compute_sweep(inst: PathInstance, lam: LambdaTable, kernel=None) -> SweepTable:
    if len(lam.lam) != inst.n - 1:
        raise MetricError(f"lambda table has {len(lam.lam)} entries, expected {inst.n - 1}")
    kernel = kernel or kernels.center_sweep
    kmax, center, radius = kernel(inst.prefix, lam.lam)
    return SweepTable(kmax=np.asarray(kmax) + 1, center=np.asarray(center) + 1, radius=np.asarray(radius))


def _case11(inst: PathInstance) -> Augmentation:
    lt = compute_lambda(inst)
    st = compute_sweep(inst, lt)
    p = int(np.argmin(st.radius))
    return Augmentation(
        i=p + 1,
        j=int(lt.jopt[p]),
        center=int(st.center[p]),
        radius=float(st.radius[p]),
        case_tag=CaseTag.CASE11,
    )


def candidate_case11(inst: PathInstance) -> Augmentation:
    """Best augmentation whose center lies at or before the edge's left end."""
    _need_two(inst)
    return _case11(inst)


def candidate_case12(inst: PathInstance) -> Augmentation:
    """Best augmentation whose center lies at or after the edge's right end."""
    _need_two(inst)
    r = _case11(inst.reversed())
    n = inst.n
    a, b = n + 1 - r.j, n + 1 - r.i
    return Augmentation(i=a, j=b, center=n + 1 - r.center, radius=r.radius, case_tag=CaseTag.CASE12)


def solve(inst: PathInstance) -> Augmentation:
    """Edge minimizing the discrete radius of P + e(v_i, v_j)."""
    if inst.n == 1:
        return Augmentation(None, None, 1, 0.0, CaseTag.DEGENERATE)
    if inst.n == 2:
        return Augmentation(1, 2, 1, inst.dist(1, 2), CaseTag.DEGENERATE)
    left = candidate_case11(inst)
    right = candidate_case12(inst)
    return right if right.radius < left.radius else left
