"""Compare the compiled kernels with the pure-Python fallback.

Two measurements:

* kernel level: ``poly_mul`` on dense trivariate polynomials modulo 32003,
  calling each implementation directly;
* end to end: a reduced Groebner basis of cyclic-4 over GF(32003), run in a
  subprocess per backend so that the import-time selection applies.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--degree D]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from ohmrush import kernels
from ohmrush._kernels_py import MODULAR

P = 32003

CYCLIC4 = """
import time
from ohmrush import kernels
from ohmrush.coeff import PrimeField
from ohmrush.poly import PolynomialRing
R = PolynomialRing(PrimeField(32003), "a,b,c,d")
gens = ["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"]
best = None
for _ in range({repeat}):
    I = R.ideal(*gens)
    start = time.perf_counter()
    G = I.groebner()
    t = time.perf_counter() - start
    best = t if best is None else min(best, t)
print(kernels.BACKEND, len(G), best)
"""


def dense(rng, degree):
    return {(i, j, k): rng.randrange(1, P)
            for i in range(degree) for j in range(degree) for k in range(degree) if rng.random() < 0.7}


def kernel_times(repeat, degree):
    rng = random.Random(0)
    f, g = dense(rng, degree), dense(rng, degree)
    out = {}
    for name, impl in kernels.implementations().items():
        timer = timeit.Timer(lambda: impl.poly_mul(f, g, MODULAR, P, None))
        out[name] = min(timer.repeat(repeat, 1))
    return out, len(f), len(g)


def cyclic4_times(repeat):
    out = {}
    for flag in ("1", "0"):
        env = dict(os.environ, OHMRUSH_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", CYCLIC4.format(repeat=repeat)],
                             env=env, capture_output=True, text=True, check=True)
        backend, size, seconds = res.stdout.split()
        out[backend] = (float(seconds), int(size))
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions, best kept (default: 5)")
    parser.add_argument("--degree", type=int, default=8, help="per-variable degree bound for poly_mul (default: 8)")
    args = parser.parse_args(argv)

    times, nf, ng = kernel_times(args.repeat, args.degree)
    print(f"poly_mul mod {P}, {nf} x {ng} terms")
    for name, t in sorted(times.items()):
        print(f"  {name:8s} {t * 1e3:9.2f} ms")
    if "cython" in times:
        print(f"  speedup  {times['python'] / times['cython']:9.2f}x")

    c4 = cyclic4_times(args.repeat)
    print(f"cyclic-4 Groebner basis over GF({P})")
    for name, (t, size) in sorted(c4.items()):
        print(f"  {name:8s} {t * 1e3:9.2f} ms  ({size} basis elements)")
    if "cython" in c4:
        print(f"  speedup  {c4['python'][0] / c4['cython'][0]:9.2f}x")
    else:
        print("  compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
