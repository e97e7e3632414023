#!/usr/bin/env python3
"""Benchmark: compiled F_p kernel vs the pure-Python fallback.

Two parts:
  * microbenchmark of rref_fp on random square matrices over F_p;
  * an end-to-end ideal workload (Ulrich classification over <6,13,28>),
    run in subprocesses so each backend is selected at import time.

Usage: python3 bench/bench_rref.py
"""

import os
import random
import subprocess
import sys
import time

from cmtype import _rref_py

try:
    from cmtype import _rref as _compiled
except ImportError:
    _compiled = None

WORKLOAD = """
import time
from cmtype import kernels
from cmtype.semigroup import NumericalSemigroup
from cmtype.linalg import GF
from cmtype.series import parse_series
from cmtype.fracideal import FractionalIdeal
from cmtype import typecalc as tc

start = time.perf_counter()
H = NumericalSemigroup([6, 13, 28])
F3 = GF(3)
tail = ["t^24", "t^26", "t^28"]
for head in ["t^6 + 1*t^13", "t^12 + 1*t^13 + 2*t^19", "t^18 + 2*t^25"]:
    gens = [parse_series(s, F3) for s in [head] + tail]
    ideal = FractionalIdeal.from_generators(H, F3, gens)
    assert tc.is_ulrich_ideal(ideal)
    assert tc.idealization_type(ideal).value == 5
print(f"{kernels.BACKEND}: {(time.perf_counter() - start) * 1000:.1f} ms")
"""


def random_matrix(rng, n, p):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def time_rref(fn, matrices, p, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in matrices:
            fn(m, p)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    rng = random.Random(1)
    p = 32003
    print(f"rref_fp over F_{p}, best of 3 (10 matrices per size)")
    print(f"{'size':>6}  {'python':>12}  {'cython':>12}  {'speedup':>8}")
    for n in (16, 32, 64, 96, 128):
        matrices = [random_matrix(rng, n, p) for _ in range(10)]
        t_py = time_rref(_rref_py.rref_fp, matrices, p)
        if _compiled is None:
            print(f"{n:>6}  {t_py * 1000:>10.2f}ms  {'(not built)':>12}")
            continue
        t_cy = time_rref(_compiled.rref_fp, matrices, p)
        for m in matrices[:2]:
            assert _rref_py.rref_fp(m, p) == _compiled.rref_fp(m, p)
        print(f"{n:>6}  {t_py * 1000:>10.2f}ms  {t_cy * 1000:>10.2f}ms  {t_py / t_cy:>7.1f}x")

    print("\nend-to-end Ulrich workload over <6,13,28>:", flush=True)
    for extra in ({"CMTYPE_PURE_PYTHON": "1"}, {}):
        env = {k: v for k, v in os.environ.items() if k != "CMTYPE_PURE_PYTHON"}
        env.update(extra)
        subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True)


if __name__ == "__main__":
    main()
