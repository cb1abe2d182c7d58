"""Time the compiled and pure-Python word-histogram kernels against each other.

Usage: python3 benchmarks/bench_kernels.py [--max-semilength 8] [--repeat 3]

For each semilength the kernels run over every content (partition of n) for a
fixed set of paths: the staircase, the full square and one middle path.  The
two backends must return identical histograms; the script exits 1 otherwise.
"""

import argparse
import sys
import timeit

from dyckchi._core import _kernels_py
from dyckchi.dyck import DyckPath, all_paths
from dyckchi.partition import partitions


def workload(n):
    paths = list(all_paths(n))
    chosen = [DyckPath("NE" * n), DyckPath("N" * n + "E" * n), paths[len(paths) // 2]]
    jobs = []
    for p in chosen:
        qp = sorted((i - 1, j - 1) for i, j in p.area_cells)
        tp = sorted((i - 1, j - 1) for i, j in p.corners)
        for mu in partitions(n):
            jobs.append((n, qp, tp, mu))
    return jobs


def run(kernel, jobs):
    return [kernel.word_histogram(*job) for job in jobs]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-semilength", type=int, default=5)
    parser.add_argument("--max-semilength", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    try:
        from dyckchi._core import _kernels
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'n':>3} {'python (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for n in range(args.min_semilength, args.max_semilength + 1):
        jobs = workload(n)
        if run(_kernels, jobs) != run(_kernels_py, jobs):
            print(f"backends disagree at semilength {n}")
            return 1
        t_py = min(timeit.repeat(lambda: run(_kernels_py, jobs), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: run(_kernels, jobs), number=1, repeat=args.repeat))
        print(f"{n:>3} {t_py:>12.4f} {t_c:>12.4f} {t_py / t_c:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
