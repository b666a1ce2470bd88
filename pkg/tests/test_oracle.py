import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roap import oracle
from roap.metric_path import MetricError, from_matrix, path_radius, validate_metric
from roap.oracle import (
    OracleMismatch,
    brute_radius,
    brute_solve,
    cycle_radius_diametral,
    cycle_radius_discrete,
    dijkstra_distance_matrix,
)

from conftest import all_instances, random_instances, rng_instances


def test_brute_radius_examples(f10, u5, u4):
    assert brute_radius(f10, 3, 8) == (5.0, 5)
    assert brute_radius(u5, 1, 2) == (2.0, 3)
    assert brute_radius(u4, 1, 4) == (2.0, 2)


def test_brute_radius_rejects_bad_edge(u5):
    with pytest.raises(MetricError):
        brute_radius(u5, 4, 2)


def test_brute_solve_examples(u6, square4, f10):
    assert brute_solve(u6).radius == 3
    sq = brute_solve(square4)
    assert sq.radius == pytest.approx(math.sqrt(2), rel=1e-12)
    assert (sq.i, sq.j, sq.center) == (1, 3, 3)
    assert brute_solve(f10).radius == 5


def test_brute_solve_single_vertex():
    res = brute_solve(from_matrix([[0.0]]), collect_all=True)
    assert res.radius == 0 and res.all_optimal_pairs == [(1, 1)]


def slow_brute(inst):
    """Quadruple loop over Dijkstra distances; shares nothing with the closed forms."""
    best = (math.inf, 0, 0, 0)
    for i in range(1, inst.n + 1):
        for j in range(i, inst.n + 1):
            d = dijkstra_distance_matrix(inst, i, j)
            for c in range(inst.n):
                ecc = max(d[c][k] for k in range(inst.n))
                if ecc < best[0] * (1 - 1e-12):
                    best = (ecc, i, j, c + 1)
    return best


@pytest.mark.parametrize("inst", rng_instances(25, 1, 7, seed=11), ids=lambda x: f"n{x.n}")
def test_brute_solve_matches_slow_loop(inst):
    r, *_ = slow_brute(inst)
    assert brute_solve(inst).radius == pytest.approx(r, rel=1e-9)


def test_cross_check_catches_bad_formula(f10, monkeypatch):
    real = oracle.aug_distance_matrix
    monkeypatch.setattr(oracle, "aug_distance_matrix", lambda *a: real(*a) * 1.01)
    with pytest.raises(OracleMismatch):
        brute_solve(f10)


def test_collect_all_lists_every_optimum(square4):
    res = brute_solve(square4, collect_all=True)
    assert sorted(res.all_optimal_pairs) == [(1, 3), (2, 4)]


@settings(max_examples=60, deadline=None)
@given(all_instances(12))
def test_brute_never_worse_than_path(inst):
    assert brute_solve(inst).radius <= path_radius(inst)[0] * (1 + 1e-12)


@settings(max_examples=60, deadline=None)
@given(random_instances(3, 12), st.data())
def test_shorter_edge_never_increases_radius(inst, data):
    d = inst.distance_matrix()
    i = data.draw(st.integers(1, inst.n - 2))
    j = data.draw(st.integers(i + 2, inst.n))
    a, b = i - 1, j - 1
    lo = float(np.max(np.abs(d[a] - d[b])))
    frac = data.draw(st.floats(0, 1))
    x = lo + frac * (d[a, b] - lo)
    d2 = d.copy()
    d2[a, b] = d2[b, a] = x
    shrunk = from_matrix(d2)
    assert validate_metric(shrunk) is None
    assert brute_radius(shrunk, i, j)[0] <= brute_radius(inst, i, j)[0]


def test_cycle_radius_examples(u4, f10):
    assert cycle_radius_discrete(u4, 1, 4) == (2.0, 2)
    assert cycle_radius_diametral(u4, 1, 4) == (2.0, 2)
    # |C(3,8)| = 9: v5 reaches v3 in 2 and v8 in 3
    assert cycle_radius_discrete(f10, 3, 8) == (3.0, 5)
    assert cycle_radius_diametral(f10, 3, 8) == (3.0, 5)


@pytest.mark.parametrize("s", [1.0, 2.5, 7.0])
def test_equilateral_triangle(s):
    tri = from_matrix([[0, s, s], [s, 0, s], [s, s, 0]])
    assert cycle_radius_discrete(tri, 1, 3)[0] == s
    assert cycle_radius_diametral(tri, 1, 3)[0] == s


def test_cycle_radius_needs_proper_edge(u4):
    with pytest.raises(MetricError):
        cycle_radius_discrete(u4, 2, 2)
    with pytest.raises(MetricError):
        cycle_radius_diametral(u4, 3, 2)


@settings(max_examples=100, deadline=None)
@given(all_instances(14), st.data())
def test_cycle_radius_two_routes_agree(inst, data):
    i = data.draw(st.integers(1, inst.n - 1))
    j = data.draw(st.integers(i + 1, inst.n))
    assert cycle_radius_diametral(inst, i, j)[0] == cycle_radius_discrete(inst, i, j)[0]
