"""Compare the numba kernels with the numpy fallback.

Kernel timings run in-process by flipping ``starfree.kernels.USE_NUMBA``;
the end-to-end timings launch the CLI in subprocesses with STARFREE_NUMBA set
to 1 and 0, which is how users pick a backend.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json out.json] [--no-cli]
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from starfree import catalog, kernels
from starfree.group import Permutation, from_cayley_table, from_permutation_generators
from starfree.morphisms import automorphisms


def _median_time(fn, repeat):
    fn()  # warm-up, includes numba compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def _fresh(G):
    # rebuilding drops per-group caches so every run searches again
    return from_cayley_table(G.table, G.label)


def _random_graph(d, p, seed):
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((d, d)) < p, 1)
    return upper | upper.T


def workloads():
    s5 = from_permutation_generators([Permutation((1, 2, 3, 4, 0)), Permutation((1, 0, 2, 3, 4))], "S5")
    graphs = [_random_graph(28, 0.3, seed) for seed in range(8)]
    aut_groups = [catalog.build(n) for n in ("C2xD8", "SL(2,3)", "A5", "GA(1,5)")]
    return {
        "associativity S5 (n=120)": lambda: kernels.associativity_violation(s5.table),
        "associativity A5 x 4": lambda: [kernels.associativity_violation(catalog.build("A5").table) for _ in range(4)],
        "automorphisms (4 groups)": lambda: [automorphisms(_fresh(G)) for G in aut_groups],
        "independence 8 graphs d=28": lambda: [kernels.independence_number(g) for g in graphs],
    }


def bench_kernels(repeat):
    rows = []
    saved = kernels.USE_NUMBA
    try:
        for name, fn in workloads().items():
            res = {}
            for backend in ("numba", "numpy"):
                kernels.USE_NUMBA = backend == "numba"
                res[backend] = _median_time(fn, repeat)
            rows.append({"workload": name, **res})
    finally:
        kernels.USE_NUMBA = saved
    return rows


def bench_cli(repeat):
    cmd = [sys.executable, "-m", "starfree.cli", "classify", "--k", "5", "--stretch", "--format", "json"]
    res = {}
    for backend, flag in (("numba", "1"), ("numpy", "0")):
        env = dict(os.environ, STARFREE_NUMBA=flag)
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            subprocess.run(cmd, env=env, check=True, capture_output=True)
            times.append(time.perf_counter() - t0)
        res[backend] = statistics.median(times)
    return {"workload": "cli classify --k 5 --stretch", **res}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="also write results to this file")
    ap.add_argument("--no-cli", action="store_true", help="skip the subprocess timings")
    args = ap.parse_args(argv)

    rows = bench_kernels(args.repeat)
    if not args.no_cli:
        rows.append(bench_cli(max(1, args.repeat // 2)))

    print(f"{'workload':34} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for r in rows:
        print(f"{r['workload']:34} {r['numba']:10.4f} {r['numpy']:10.4f} {r['numpy'] / r['numba']:7.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
