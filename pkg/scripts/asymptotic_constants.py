"""Print singularity constants and compare the first-order estimate with exact counts."""

import argparse
import math

from intervalposets.enumeration import asymptotics, count_interval_posets, count_tree_interval_posets

COUNTS = {"posets": count_interval_posets, "tree_posets": count_tree_interval_posets}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="*", default=[10, 50, 100, 200, 400])
    args = ap.parse_args()
    for family, count in COUNTS.items():
        d = asymptotics(family)
        print(f"{family}: tau={d.tau:.6f} rho={d.rho:.6f} amplitude={d.amplitude:.6f} "
              f"stanley={d.stanley_constant:.6f} 1/rho={d.growth_constant:.6f} residual={d.residual:.1e}")
        for n in args.n:
            log_est = math.log(d.stanley_constant) + n * math.log(d.growth_constant) - 1.5 * math.log(n)
            print(f"  n={n:<4} exact/estimate = {math.exp(math.log(count(n)) - log_est):.6f}")


if __name__ == "__main__":
    main()
