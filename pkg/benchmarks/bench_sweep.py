"""Time the exhaustive ordinary-partition sweep three ways.

  compiled     numba kernel (kernels.sweep_ordinary)
  interpreted  the same kernel source with PARTITION_HODGE_DISABLE_NUMBA=1
  objects      enumerate_ordinary + build_report on BlockPartition objects

Usage: python benchmarks/bench_sweep.py [--n 30 40 50] [--repeat 3] [--skip-interpreted]
"""

import argparse
import time

from partition_hodge import kernels
from partition_hodge.hodge import build_report


def best_of(repeat, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n", type=int, nargs="+", default=[30, 40, 50])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-interpreted", action="store_true")
    args = parser.parse_args()

    if not kernels.NUMBA_ENABLED:
        print("numba disabled in this process; the 'compiled' column runs interpreted code")
    start = time.perf_counter()
    kernels.sweep_ordinary(5)
    print(f"warm-up / JIT load: {time.perf_counter() - start:.2f}s")
    interpreted = None if args.skip_interpreted else kernels.load_interpreted()

    print(f"{'n':>4} {'partitions':>11} {'compiled':>10} {'interpreted':>12} {'objects':>9} {'speedup':>8}")
    for n in args.n:
        t_fast, sweep = best_of(args.repeat, kernels.sweep_ordinary, n)
        t_obj, report = best_of(1, build_report, n, "ordinary")
        assert sweep.harmonic == report.cohomology and sweep.defects == 0
        if interpreted is not None:
            t_slow, slow = best_of(1, interpreted.sweep_ordinary, n)
            assert slow.counts == sweep.counts and slow.harmonic == sweep.harmonic
            slow_col, ratio = f"{t_slow:>11.3f}s", f"{t_slow / t_fast:>7.0f}x"
        else:
            slow_col, ratio = f"{'-':>12}", f"{'-':>8}"
        print(f"{n:>4} {sweep.total:>11} {t_fast:>9.3f}s {slow_col} {t_obj:>8.3f}s {ratio}")


if __name__ == "__main__":
    main()
