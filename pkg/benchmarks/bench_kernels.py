"""Numba vs numpy batched dominantization.

    python3 benchmarks/bench_kernels.py [--rows 200000] [--repeat 5]

Draws random weights in a few Cartan types, checks the two backends agree
row for row, and prints best-of-N wall times.
"""
import argparse
import time

import numpy as np

from hessdeform._kernels import dominantize_batch_jit, dominantize_batch_numpy
from hessdeform.rootsys import build_root_system


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--rows", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--box", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'type':<5} {'rows':>8} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for name in ("A4", "B4", "F4", "E6", "E8"):
        rs = build_root_system(name)
        mus = rng.integers(-args.box, args.box + 1, size=(args.rows, rs.rank), dtype=np.int64)
        cart = rs.cartan_matrix
        dominantize_batch_jit(mus[:10], cart)  # compile outside the timing

        l1, o1 = dominantize_batch_numpy(mus, cart)
        l2, o2 = dominantize_batch_jit(mus, cart)
        ok = l1 >= 0
        assert np.array_equal(l1, l2) and np.array_equal(o1[ok], o2[ok]), name

        t_np = best_of(lambda: dominantize_batch_numpy(mus, cart), args.repeat)
        t_nb = best_of(lambda: dominantize_batch_jit(mus, cart), args.repeat)
        print(f"{name:<5} {args.rows:>8} {t_np:>9.4f} {t_nb:>9.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
