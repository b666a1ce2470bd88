import json

import numpy as np
import pytest
from hypothesis import given, settings

from roap.generators import GenSpec, gen_euclidean, gen_graph_completion, generate, paper_fig1
from roap.metric_path import MetricError, build, path_distance, path_radius, validate_metric
from roap.oracle import brute_radius, brute_solve
from roap.solver import solve

from conftest import gen_specs


def test_single_vertex_euclidean():
    inst = gen_euclidean(GenSpec("euclidean", 1, seed=5))
    assert inst.n == 1 and solve(inst).radius == 0


def test_one_dimensional_is_colinear():
    inst = gen_euclidean(GenSpec("euclidean", 5, seed=9, dim=1))
    assert inst.dim == 1
    assert solve(inst).radius <= path_radius(inst)[0] * (1 + 1e-12)


def test_euclidean_in_unit_cube():
    inst = gen_euclidean(GenSpec("euclidean", 30, seed=42, dim=2))
    assert inst.coords.shape == (30, 2)
    assert np.all((inst.coords >= 0) & (inst.coords < 1))
    assert validate_metric(inst) is None


def test_zero_extra_edges_is_path_metric():
    inst = gen_graph_completion(GenSpec("graph", 12, seed=4))
    for i in range(1, 13):
        for j in range(1, 13):
            assert inst.dist(i, j) == pytest.approx(path_distance(inst, i, j), rel=1e-12)
    steps = np.diff(inst.prefix)
    assert np.all((steps >= 1) & (steps <= 2))


def test_graph_spec_example():
    inst = generate(GenSpec("graph", 20, seed=7, extra_edges=3))
    assert validate_metric(inst) is None
    assert solve(inst).radius == pytest.approx(brute_solve(inst).radius, rel=1e-9)


def test_chords_shorten_distances():
    inst = generate(GenSpec("graph", 40, seed=2, extra_edges=10))
    d = inst.distance_matrix()
    dp = np.abs(inst.prefix[:, None] - inst.prefix[None, :])
    assert np.any(d < dp - 1.0)


def test_fig1():
    f = paper_fig1()
    assert f.dist(3, 8) == 4
    assert f.prefix.tolist() == list(range(10))
    r, c = brute_radius(f, 3, 8)
    assert r == 5 and c in (5, 6)
    assert validate_metric(f) is None


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(model="torus", n=3),
        dict(model="euclidean", n=0),
        dict(model="euclidean", n=3, dim=0),
        dict(model="graph", n=1),
        dict(model="graph", n=4, extra_edges=-1),
        dict(model="graph", n=4, seed=-1),
    ],
)
def test_bad_specs(kwargs):
    with pytest.raises(MetricError):
        GenSpec(**kwargs)


@settings(max_examples=40, deadline=None)
@given(gen_specs(1, 30))
def test_deterministic_and_metric(spec):
    a, b = generate(spec), generate(spec)
    assert json.dumps(a.to_document()) == json.dumps(b.to_document())
    assert validate_metric(a) is None
    assert build(a.to_document()).digest() == a.digest()
