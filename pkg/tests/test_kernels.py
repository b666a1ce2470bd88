import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings

from roap import kernels
from roap.generators import GenSpec, generate

from conftest import all_instances

needs_numba = pytest.mark.skipif(not kernels.NUMBA_AVAILABLE, reason="numba not installed")


@needs_numba
@settings(max_examples=80, deadline=None)
@given(all_instances(20))
def test_backends_bit_identical(inst):
    lam_a, j_a = kernels.lambda_table_numba(inst.prefix, inst.coords, inst.matrix)
    lam_b, j_b = kernels.lambda_table_numpy(inst.prefix, inst.coords, inst.matrix)
    assert np.array_equal(lam_a, lam_b) and np.array_equal(j_a, j_b)
    sweep_a = kernels.center_sweep_numba(inst.prefix, lam_a)
    sweep_b = kernels.center_sweep_numpy(inst.prefix, lam_b)
    for x, y in zip(sweep_a, sweep_b):
        assert np.array_equal(x, y)


@needs_numba
@pytest.mark.parametrize("spec", [GenSpec("euclidean", 400, 42, dim=2), GenSpec("graph", 300, 5, extra_edges=60)])
def test_backends_identical_on_larger_instances(spec):
    inst = generate(spec)
    a = kernels.lambda_table_numba(inst.prefix, inst.coords, inst.matrix)
    b = kernels.lambda_table_numpy(inst.prefix, inst.coords, inst.matrix)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_sweep_steps_back_when_rounding_breaks_monotonicity():
    # lambda drops faster than the path grows between i=1 and i=2 (not a
    # valid table, but the sweep must still report the definitional pivot)
    prefix = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    lam = np.array([10.0, 10.0, 10.0, 0.0])
    for sweep in (kernels.center_sweep_numpy, kernels.center_sweep_numba):
        kmax, center, radius = sweep(prefix, lam)
        assert kmax.tolist() == [0, 1, 2, 1]
        assert center[3] == 1 and radius[3] == 2.0


def _backend_in_subprocess(flag):
    env = dict(os.environ)
    if flag is None:
        env.pop("ROAP_DISABLE_NUMBA", None)
    else:
        env["ROAP_DISABLE_NUMBA"] = flag
    out = subprocess.run(
        [sys.executable, "-c", "import roap.kernels as k; print(k.backend(), k.lambda_table.__name__)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return out.stdout.split()


@pytest.mark.parametrize("flag", ["1", "true", "yes"])
def test_env_flag_selects_numpy(flag):
    assert _backend_in_subprocess(flag) == ["numpy", "lambda_table_numpy"]


@needs_numba
@pytest.mark.parametrize("flag", [None, "0", ""])
def test_default_backend_is_numba(flag):
    assert _backend_in_subprocess(flag) == ["numba", "lambda_table_numba"]
