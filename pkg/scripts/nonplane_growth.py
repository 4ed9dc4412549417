"""Ratio-test estimates of the non-plane growth constants.

The raw ratio q_N / q_{N-1} converges like beta (1 - 3/(2N)); the
extrapolated column removes that first correction.
"""

import argparse

from intervalposets.enumeration import nonplane_growth


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, nargs="*", default=[50, 100, 200, 400])
    args = ap.parse_args()
    print(f"{'family':<12} {'N':>4} {'ratio':>9} {'extrap':>9} {'alpha':>9}")
    for family in ("posets", "tree_posets"):
        for N in args.N:
            g = nonplane_growth(family, N)
            print(f"{family:<12} {N:>4} {g.ratio:>9.5f} {g.extrapolated:>9.5f} {g.amplitude:>9.5f}")


if __name__ == "__main__":
    main()
