#!/usr/bin/env python3
"""Benchmark the F_p elimination kernel: numba jit vs pure numpy.

The kernel is the hot loop of the Riemann-Roch oracle (one rank
computation per divisor dimension).  Matrix shapes below bracket what
verification campaigns actually produce, plus larger ones for headroom.

Run:  python3 benchmarks/bench_kernel.py [--repeats 200]
"""

import argparse
import random
import time

import numpy as np

from pushfwd.linalg import HAVE_NUMBA, rank_mod_p_numpy

if HAVE_NUMBA:
    from pushfwd.linalg import rank_mod_p_numba

SHAPES = ((8, 14), (16, 30), (40, 60), (120, 160))
PRIMES = (17, 10007)


def time_fn(fn, mats, p, repeats):
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(repeats):
            for m in mats:
                fn(m, p)
        best = min(best, (time.perf_counter() - start) / (repeats * len(mats)))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=50)
    args = parser.parse_args()

    rng = random.Random(0)
    print(f"{'shape':>10} {'p':>6} {'numpy (us)':>12} {'numba (us)':>12} {'speedup':>8}")
    for shape in SHAPES:
        for p in PRIMES:
            mats = [
                np.array([[rng.randrange(p) for _ in range(shape[1])]
                          for _ in range(shape[0])], dtype=np.int64)
                for _ in range(4)
            ]
            if HAVE_NUMBA:
                rank_mod_p_numba(mats[0], p)  # warm the jit cache
                assert rank_mod_p_numba(mats[0], p) == rank_mod_p_numpy(mats[0], p)
            t_np = time_fn(rank_mod_p_numpy, mats, p, args.repeats)
            if HAVE_NUMBA:
                t_nb = time_fn(rank_mod_p_numba, mats, p, args.repeats)
                print(f"{str(shape):>10} {p:>6} {t_np * 1e6:>12.1f} "
                      f"{t_nb * 1e6:>12.1f} {t_np / t_nb:>8.1f}x")
            else:
                print(f"{str(shape):>10} {p:>6} {t_np * 1e6:>12.1f} "
                      f"{'n/a':>12} {'n/a':>8}")
    if not HAVE_NUMBA:
        print("numba not importable; only the numpy path was timed")


if __name__ == "__main__":
    main()
