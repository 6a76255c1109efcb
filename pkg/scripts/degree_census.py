"""Check degree-colourability against GDP-tree status on every connected
simple graph up to a given order (at most 7)."""
import argparse
import time

from dpcolor.census import atlas_graphs
from dpcolor.multigraph import classify_gdp
from dpcolor.solver import is_dp_degree_colorable


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-covers", type=int, default=10**6)
    args = ap.parse_args()
    tally = {"agree": 0, "disagree": 0, "undecided": 0}
    t0 = time.perf_counter()
    for g in atlas_graphs(args.max_n, connected=True):
        v = is_dp_degree_colorable(g, max_covers=args.max_covers)
        if v.colorable is None:
            tally["undecided"] += 1
            print(f"undecided: n={g.n} edges={[e[:2] for e in g.edges]}")
        elif v.colorable != classify_gdp(g).is_gdp_tree:
            tally["agree"] += 1
        else:
            tally["disagree"] += 1
            print(f"DISAGREE: n={g.n} edges={[e[:2] for e in g.edges]}")
    print(f"{tally}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
