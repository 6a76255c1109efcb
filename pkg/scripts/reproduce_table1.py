"""Print the average-degree bounds table (Ga, KY, Ra, DP) and optionally save it as CSV."""
import argparse
from pathlib import Path

from dpcolor.bounds import table1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", default="4,5,6,7,8,9,10,15,20")
    ap.add_argument("--rounding", choices=("half_even", "truncate"), default="truncate")
    ap.add_argument("--csv", type=Path, help="also write the table here")
    args = ap.parse_args()
    t = table1([int(x) for x in args.k.split(",")])
    print(t.to_text(args.rounding), end="")
    if args.csv:
        args.csv.write_text(t.to_csv(args.rounding))
        print(f"wrote {args.csv}")


if __name__ == "__main__":
    main()
