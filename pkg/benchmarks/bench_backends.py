"""Time the numba and numpy kernels side by side on the same instances.

    python benchmarks/bench_backends.py --sizes 500,1000,2000 --repeats 3

Both backends are imported directly, so ROAP_DISABLE_NUMBA has no effect
here. Each row also checks that the two backends produced identical tables.
"""
from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from roap import kernels
from roap.generators import GenSpec, generate

BACKENDS = {
    "numba": (kernels.lambda_table_numba, kernels.center_sweep_numba),
    "numpy": (kernels.lambda_table_numpy, kernels.center_sweep_numpy),
}


def time_backend(inst, name: str, repeats: int) -> tuple[float, tuple]:
    lam_k, sweep_k = BACKENDS[name]
    times, out = [], None
    for _ in range(repeats):
        t0 = time.perf_counter()
        lam, jopt = lam_k(inst.prefix, inst.coords, inst.matrix)
        out = (lam, jopt, *sweep_k(inst.prefix, lam))
        times.append((time.perf_counter() - t0) * 1e3)
    return statistics.median(times), out


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="500,1000,2000")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--model", choices=["euclidean", "graph"], default="euclidean")
    args = ap.parse_args(argv)
    if not kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not importable; nothing to compare")

    warm = generate(GenSpec(args.model, 8, args.seed))
    time_backend(warm, "numba", 1)

    print(f"model={args.model} repeats={args.repeats} (lambda table + center sweep)")
    print(f"{'n':>7} {'numba_ms':>10} {'numpy_ms':>10} {'speedup':>8} {'identical':>10}")
    for n in (int(s) for s in args.sizes.split(",")):
        inst = generate(GenSpec(args.model, n, args.seed))
        t_jit, a = time_backend(inst, "numba", args.repeats)
        t_np, b = time_backend(inst, "numpy", args.repeats)
        same = all(np.array_equal(x, y) for x, y in zip(a, b))
        print(f"{n:>7} {t_jit:>10.1f} {t_np:>10.1f} {t_np / t_jit:>8.2f} {str(same):>10}")


if __name__ == "__main__":
    main()
