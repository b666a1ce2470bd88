"""Command-line front end: ``roap solve | gen | verify | bench``.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error,
3 metric violation.
"""
from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from pathlib import Path

import numpy as np

from . import kernels
from .checks import check_instance, close, is_feasible
from .generators import GenSpec, generate, paper_fig1
from .metric_path import MetricError, PathInstance, build, document_digest, validate_metric
from .oracle import MAX_ORACLE_N, brute_solve
from .solver import solve

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_METRIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def load_instance(path: str) -> tuple[PathInstance, dict]:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None
    try:
        return build(doc), doc
    except MetricError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_solve(args) -> int:
    inst, doc = load_instance(args.instance)
    report: dict = {"input_digest": document_digest(doc), "n": inst.n, "backend": kernels.backend()}
    if args.validate:
        violation = validate_metric(inst)
        if violation is not None:
            print(f"error: metric violation: {violation}", file=sys.stderr)
            return EXIT_METRIC
        report["validation"] = {"ok": True}
    t0 = time.perf_counter()
    aug = solve(inst)
    report["elapsed_ms"] = (time.perf_counter() - t0) * 1e3
    report["result"] = aug.as_dict()
    code = EXIT_OK
    if args.verify_oracle:
        if inst.n > MAX_ORACLE_N:
            raise UsageError(f"--verify-oracle refuses n={inst.n} > {MAX_ORACLE_N}")
        orc = brute_solve(inst)
        match = close(aug.radius, orc.radius) and is_feasible(inst, aug)
        report["oracle"] = {
            "i": orc.i,
            "j": orc.j,
            "center": orc.center,
            "radius": orc.radius,
            "match": match,
        }
        if not match:
            code = EXIT_MISMATCH
    _emit(report, args.output)
    return code


def cmd_gen(args) -> int:
    if args.model == "fig1":
        inst = paper_fig1()
    else:
        try:
            spec = GenSpec(args.model, args.n, args.seed, dim=args.dim, extra_edges=args.extra)
        except MetricError as exc:
            raise UsageError(str(exc)) from None
        inst = generate(spec)
    _emit(inst.to_document(), args.output)
    return EXIT_OK


def verify_batch(count: int, n_min: int, n_max: int, seed: int, log=None) -> dict:
    """Run ``count`` random instances per generator through every check."""
    rng = np.random.default_rng(seed)
    summary = {"instances": 0, "passed": 0, "failed": 0, "failures": []}
    for model in ("euclidean", "graph"):
        lo = max(n_min, 2) if model == "graph" else n_min
        for _ in range(count):
            n = int(rng.integers(lo, n_max + 1))
            spec = GenSpec(
                model,
                n,
                seed=int(rng.integers(0, 2**63)),
                dim=int(rng.integers(1, 4)),
                extra_edges=int(rng.integers(0, n + 1)),
            )
            rep = check_instance(generate(spec))
            summary["instances"] += 1
            if rep.ok:
                summary["passed"] += 1
            else:
                summary["failed"] += 1
                summary["failures"].append({"spec": spec.__dict__, "failures": rep.failures})
                if log:
                    log(f"FAIL {spec}: {'; '.join(rep.failures)}")
    return summary


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.replace(":", ",").split(","))
    except ValueError:
        raise UsageError(f"--n-range must look like MIN,MAX, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"invalid n-range [{lo}, {hi}]")
    if hi > MAX_ORACLE_N:
        raise UsageError(f"n-range max {hi} exceeds the oracle limit {MAX_ORACLE_N}")
    return lo, hi


def cmd_verify(args) -> int:
    n_min, n_max = _parse_range(args.n_range)
    if args.count < 0:
        raise UsageError("count must be >= 0")
    summary = verify_batch(args.count, n_min, n_max, args.seed, log=lambda s: print(s, file=sys.stderr))
    print(f"verified {summary['instances']} instances: {summary['passed']} passed, {summary['failed']} failed")
    return EXIT_OK if summary["failed"] == 0 else EXIT_MISMATCH


def bench_rows(sizes: list[int], seed: int, repeats: int, model: str = "euclidean") -> list[dict]:
    rows = []
    solve(generate(GenSpec(model, 8, seed)))  # jit warm-up
    prev = None
    for n in sizes:
        inst = generate(GenSpec(model, n, seed))
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            solve(inst)
            times.append((time.perf_counter() - t0) * 1e3)
        med = statistics.median(times)
        row = {"n": n, "median_ms": med, "ratio": None, "exponent": None}
        if prev is not None and prev[1] > 0:
            row["ratio"] = med / prev[1]
            row["exponent"] = math.log(row["ratio"]) / math.log(n / prev[0])
        rows.append(row)
        prev = (n, med)
    return rows


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    if not sizes or min(sizes) < 1 or args.repeats < 1:
        raise UsageError("need positive sizes and repeats")
    rows = bench_rows(sizes, args.seed, args.repeats, args.model)
    if args.json:
        _emit({"backend": kernels.backend(), "model": args.model, "rows": rows}, None)
        return EXIT_OK
    print(f"backend={kernels.backend()} model={args.model} repeats={args.repeats}")
    print(f"{'n':>9} {'median_ms':>12} {'ratio':>8} {'exponent':>9}")
    for r in rows:
        ratio = "-" if r["ratio"] is None else f"{r['ratio']:.2f}"
        expo = "-" if r["exponent"] is None else f"{r['exponent']:.2f}"
        print(f"{r['n']:>9} {r['median_ms']:>12.2f} {ratio:>8} {expo:>9}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roap", description="Radius-optimal single-edge augmentation of a metric path.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--validate", action="store_true", help="check the metric axioms first (O(n^3))")
    p.add_argument("--verify-oracle", action="store_true", help="compare with brute force (n <= 200)")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("model", choices=["euclidean", "graph", "fig1"])
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--extra", type=int, default=0, help="random chords (graph model)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="batch oracle comparison on random instances")
    p.add_argument("--count", type=int, default=100, help="instances per generator")
    p.add_argument("--n-range", default="2,40", help="MIN,MAX vertex counts (MAX <= 200)")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time solve on growing instances")
    p.add_argument("--sizes", default="1000,2000,4000")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--model", choices=["euclidean", "graph"], default="euclidean")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
