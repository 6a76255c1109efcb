"""Smallest value of Phi_k - (1 + alpha) over all generated GDP-trees and
admissible list sizes, per k."""
import argparse
from fractions import Fraction

from dpcolor.census import gdp_trees
from dpcolor.multigraph import classify_gdp
from dpcolor.potential import params, phi_scaled_grid


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--max-mult", type=int, default=3)
    ap.add_argument("--k", default="5,6,7,8")
    args = ap.parse_args()
    trees = list(gdp_trees(args.max_n, args.max_mult))
    for k in (int(x) for x in args.k.split(",")):
        p = params(k)
        den = 2 * k - 7
        best, where, count = None, None, 0
        for t in trees:
            if any(b.regularity in (k - 1, k - 2) for b in classify_gdp(t).blocks if len(b.vertices) > 1):
                continue
            grid, ranges = phi_scaled_grid(t, p)
            if grid.size == 0:
                continue
            count += grid.size
            m = int(grid.min())
            if best is None or m < best:
                best, where = m, t
        gap = Fraction(best, den) - 1 - p.alpha
        print(f"k={k}: {count} (T, h) pairs, min Phi_k - (1 + alpha) = {gap}  at {where}")


if __name__ == "__main__":
    main()
