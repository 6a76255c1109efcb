"""Enumerate all normalised covers of small cycles, cliques and their
multiples, and compare the non-colourable ones with the canonical hard cover."""
import argparse
import time

from dpcolor.solver import verify_lemma31

CASES = [("even_cycle", t, 1) for t in (2, 3, 4)] + [("odd_cycle", t, 1) for t in (1, 2, 3, 4)] \
    + [("clique", t, 1) for t in (2, 3, 4, 5)] \
    + [("even_cycle", 2, 2), ("odd_cycle", 1, 2), ("clique", 2, 2), ("clique", 3, 2), ("clique", 2, 3)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-covers", type=int, default=10**7)
    args = ap.parse_args()
    print(f"{'family':>10} {'t':>2} {'q':>2} {'space':>10} {'bad':>5} {'match':>5}  verdict   time")
    for family, t, q in CASES:
        t0 = time.perf_counter()
        r = verify_lemma31(family, t, q, args.max_covers)
        verdict = "undecided" if r.undecided else ("holds" if r.passed else "FAILS")
        print(f"{family:>10} {t:>2} {q:>2} {r.covers_in_space:>10} {r.bad_covers:>5} {r.matching_hard_cover:>5}"
              f"  {verdict:<9} {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
