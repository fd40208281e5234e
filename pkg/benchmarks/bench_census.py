"""Benchmark the census sweep: numba kernel versus the numpy fallback.

Runs the same full sweeps on both backends, checks that the resulting
tables are identical, and prints a timing table.  The numba kernel is
warmed up (JIT compiled) before anything is timed.

Usage:
    python3 benchmarks/bench_census.py
    python3 benchmarks/bench_census.py --full --jobs 4
"""
import argparse
import time

from dihyper.formulas import total_hyperarc_count
from dihyper.oracle import available_backends, census


def timed_census(n, b, backend, jobs):
    start = time.perf_counter()
    table = census(n, b, cap=40, jobs=jobs, backend=backend)
    return table, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true",
                        help="include the (n=4, b=3) sweep, 2^24 subsets")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers per sweep (default 1)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per cell, best time kept (default 3)")
    args = parser.parse_args()

    backends = available_backends()
    if "numba" not in backends:
        parser.error("numba backend unavailable, nothing to compare against")

    cells = [(3, 2), (4, 2), (3, 3), (5, 2)]
    if args.full:
        cells.append((4, 3))

    # warm up the JIT before taking any timings
    census(2, 2, backend="numba")
    census(2, 2, backend="numpy")

    print(f"jobs={args.jobs} repeat={args.repeat} (best of)")
    header = f"{'n':>3} {'b':>3} {'universe':>9} {'numba':>10} {'numpy':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n, b in cells:
        bits = total_hyperarc_count(n, b)
        best = {}
        tables = {}
        for backend in ("numba", "numpy"):
            best[backend] = float("inf")
            for _ in range(args.repeat):
                table, elapsed = timed_census(n, b, backend, args.jobs)
                best[backend] = min(best[backend], elapsed)
                tables[backend] = table
        if tables["numba"] != tables["numpy"]:
            raise SystemExit(f"backend disagreement at n={n} b={b}")
        speedup = best["numpy"] / best["numba"]
        print(
            f"{n:>3} {b:>3} {f'2^{bits}':>9} {best['numba']:>9.3f}s "
            f"{best['numpy']:>9.3f}s {speedup:>7.1f}x"
        )
    print("backends agree on every cell")


if __name__ == "__main__":
    main()
