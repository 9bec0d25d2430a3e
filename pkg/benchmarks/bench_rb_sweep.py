"""Compare the compiled and numpy kernels of the Rota-Baxter sweep.

    python3 benchmarks/bench_rb_sweep.py [--repeat N]
"""

import argparse
import time

import numpy as np

from leibniz import LeibnizAlgebra, PrimeField, dual_representation, regular_representation
from leibniz import _kernels

CASES = [
    # (label, prime, algebra brackets, dimension, use dual)
    ("alg2 dual, F_5", 5, {(2, 1): {1: 1}, (2, 2): {1: 1}}, 2, True),
    ("alg2 dual, F_11", 11, {(2, 1): {1: 1}, (2, 2): {1: 1}}, 2, True),
    ("alg2 dual, F_31", 31, {(2, 1): {1: 1}, (2, 2): {1: 1}}, 2, True),
    ("heisenberg regular, F_3", 3, {(1, 2): {3: 1}, (2, 1): {3: -1}}, 3, False),
    ("central ext. dual, F_3", 3, {(1, 1): {3: 1}, (1, 2): {3: 2}, (2, 1): {3: -1}}, 3, True),
]


def as_ints(a):
    return np.vectorize(int, otypes=[np.int64])(a)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if "cython" not in _kernels.BACKENDS:
        raise SystemExit("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
    print(f"{'case':<26}{'space':>9}{'found':>7}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for label, p, brackets, n, dual in CASES:
        F = PrimeField(p)
        rep = regular_representation(LeibnizAlgebra.from_brackets(n, brackets, F))
        if dual:
            rep = dual_representation(rep)
        c, L, R = as_ints(rep.algebra.c), as_ints(rep.rhoL), as_ints(rep.rhoR)
        total = p ** (n * rep.dim)
        timings = {}
        results = {}
        for name in ("python", "cython"):
            kernel = _kernels.get_backend(name)
            timings[name], results[name] = best_of(lambda: kernel(c, L, R, p, 0, total), args.repeat)
        if results["python"] != results["cython"]:
            raise SystemExit(f"{label}: backends disagree")
        speedup = timings["python"] / timings["cython"]
        print(
            f"{label:<26}{total:>9}{len(results['python']):>7}"
            f"{timings['python']:>11.4f}{timings['cython']:>11.4f}{speedup:>8.1f}x"
        )


if __name__ == "__main__":
    main()
