"""Run the charge rules over a random corpus of multigraphs and summarise
conservation, the per-vertex case bounds, and the low-component check."""
import argparse
import collections
import random

from dpcolor.census import random_connected_multigraph, random_h
from dpcolor.discharging import UndefinedSpecialSet, check_cases, component_sum_vs_phi, discharge


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-mult", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    cases = collections.Counter()
    broken = collections.Counter()
    undefined = strict = vacuous = 0
    done = 0
    while done < args.graphs:
        g = random_connected_multigraph(rng, args.max_n, args.max_mult)
        k = rng.choice([5, 6, 7])
        h = random_h(rng, g, k)
        try:
            led = discharge(g, h, k)
        except UndefinedSpecialSet:
            undefined += 1
            continue
        done += 1
        broken["conservation"] += not led.conserved
        for c in check_cases(g, led):
            cases[c.case] += 1
            broken[c.case] += not (c.holds and c.conclusion)
        rep = component_sum_vs_phi(g, h, led)
        vacuous += rep.vacuous
        broken["component"] += not rep.ok
        strict += sum(1 for c in rep.components if c.strict_holds)
    print(f"graphs {done} (undefined special set redrawn {undefined})")
    print("case tallies:", dict(sorted(cases.items())))
    print("violations:", dict(sorted(broken.items())))
    print(f"components checked strictly: {strict}; vacuous low part: {vacuous}")


if __name__ == "__main__":
    main()
