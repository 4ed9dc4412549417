"""Tabulate formula, series and brute-force counts side by side.

    python3 scripts/census_table.py --max-n 8 --workers 4
"""

import argparse
import time

from intervalposets.enumeration import (
    brute_force_census, count_interval_posets, count_tree_interval_posets, count_two_realizer,
    series_fixed_point, series_nonplane,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    N = args.max_n
    p_series = series_fixed_point("posets", N)
    t_series = series_fixed_point("tree_posets", N)
    q_series = series_nonplane("posets", N)
    qt_series = series_nonplane("tree_posets", N)
    header = f"{'n':>2} {'p':>7} {'p~':>7} {'t':>6} {'t~':>6} {'q':>5} {'q~':>5} {'qt':>4} {'qt~':>4} {'a':>5} {'a~':>5} {'sec':>6}"
    print(header)
    print("-" * len(header))
    # ~ marks the brute-force value
    for n in range(1, N + 1):
        start = time.perf_counter()
        c = brute_force_census(n, workers=args.workers)
        elapsed = time.perf_counter() - start
        row = (n, count_interval_posets(n), c.p, count_tree_interval_posets(n), c.t,
               q_series[n], c.q, qt_series[n], c.q_tree, count_two_realizer(n), c.a)
        assert p_series[n] == row[1] and t_series[n] == row[3]
        print(f"{row[0]:>2} {row[1]:>7} {row[2]:>7} {row[3]:>6} {row[4]:>6} {row[5]:>5} {row[6]:>5} "
              f"{row[7]:>4} {row[8]:>4} {row[9]:>5} {row[10]:>5} {elapsed:>6.2f}")


if __name__ == "__main__":
    main()
