#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two levels:
  * kernel microbenchmarks on a mid-size ring/module (both backends are
    importable side by side), and
  * an end-to-end corpus verification run per backend, forced through the
    GRADEDSPECTRA_KERNELS environment variable in a subprocess.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

from gradedspectra.kernels import pykernels

try:
    from gradedspectra.kernels import _ckernels
except ImportError:
    _ckernels = None


def build_workload():
    """Mid-size tables: the order-64 scalar ring acting on Z_8 x Z_8."""
    n = 64
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    m = 64
    factors = (8, 8)

    def index(x, y):
        return x * 8 + y

    madd = [[index((a // 8 + b // 8) % 8, (a % 8 + b % 8) % 8) for b in range(m)]
            for a in range(m)]
    act = [[index((r * (x // 8)) % 8, (r * (x % 8)) % 8) for x in range(m)]
           for r in range(n)]
    return add, mul, madd, act


def run_kernel_suite(backend, add, mul, madd, act, repeat):
    rt = backend.prepare_ring(add, mul)
    mt = backend.prepare_module(madd, act)
    n = len(add)
    m = len(madd)
    full_ring = (1 << n) - 1
    evens = sum(1 << i for i in range(0, n, 2))
    sub = sum(1 << i for i in range(0, m, 4))
    timings = {}

    def clock(name, fn):
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        timings[name] = best

    clock("ring_orbit x n", lambda: [backend.ring_orbit(rt, a) for a in range(n)])
    clock("set_sums(evens, evens)", lambda: backend.set_sums(rt, evens, evens))
    clock("set_products(full, full)", lambda: backend.set_products(rt, full_ring, full_ring))
    clock("additive_closure(3 gens)", lambda: backend.additive_closure(rt, 0b10110))
    clock("module_orbit x m", lambda: [backend.module_orbit(mt, x) for x in range(m)])
    clock("ann_in_ring(sub)", lambda: backend.ann_in_ring(mt, sub))
    clock("ann_in_module(evens)", lambda: backend.ann_in_module(mt, evens))
    clock("is_second(full scalars)", lambda: backend.is_second_set(mt, full_ring, sub))
    return timings


def end_to_end(backend_name):
    env = dict(os.environ, GRADEDSPECTRA_KERNELS=backend_name)
    code = (
        "import time\n"
        "from gradedspectra.corpus import CorpusBounds, generate_corpus\n"
        "from gradedspectra.suites import run_suites, totals_of\n"
        "t0 = time.perf_counter()\n"
        "insts, _ = generate_corpus(CorpusBounds(32, 64, 8, 60), seed=7)\n"
        "results = run_suites(insts)\n"
        "dt = time.perf_counter() - t0\n"
        "totals = totals_of(results)\n"
        "assert totals['fail'] == 0, totals\n"
        "print(f'{dt:.3f}')\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()

    add, mul, madd, act = build_workload()
    backends = [("python", pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("note: compiled kernels not built; benchmarking the fallback only")

    results = {
        name: run_kernel_suite(mod, add, mul, madd, act, args.repeat)
        for name, mod in backends
    }
    names = list(results["python"])
    print(f"{'kernel':30s}" + "".join(f"{n:>12s}" for n, _ in backends) +
          ("      speedup" if len(backends) == 2 else ""))
    for op in names:
        row = f"{op:30s}"
        for name, _ in backends:
            row += f"{results[name][op] * 1e6:10.1f}us"
        if len(backends) == 2:
            row += f"{results['python'][op] / results['cython'][op]:11.1f}x"
        print(row)

    if not args.skip_e2e:
        print("\nend-to-end: 60-instance corpus, full suite catalog")
        for name, _ in backends:
            dt = end_to_end(name)
            print(f"  {name:8s} {dt:8.2f}s")


if __name__ == "__main__":
    main()
