#!/usr/bin/env python3
"""Sweep coprime gap pairs and compare closed forms against the oracle.

Writes the full CSV (same format as `batons sweep`) and prints a short
aggregate: pairs per congruence case, extreme densities seen, and the
mismatch count (which should always be zero).

Usage: python3 scripts/sweep_formula_vs_oracle.py [--l1-max N] [--l2-max N]
       [--output sweep.csv] [--threads K]
"""

import argparse
import sys
import time
from collections import Counter
from fractions import Fraction

from batons.cli import sweep_rows, write_sweep_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--l1-max", type=int, default=10)
    parser.add_argument("--l2-max", type=int, default=10)
    parser.add_argument("--output", default="sweep.csv")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    rows = sweep_rows(args.l1_max, args.l2_max, threads=args.threads)
    elapsed = time.perf_counter() - start
    with open(args.output, "w", newline="") as fh:
        write_sweep_csv(rows, fh)

    cases = Counter(row["case"] for row in rows)
    packing = [Fraction(row["dp_oracle"]) for row in rows]
    covering = [Fraction(row["dc_oracle"]) for row in rows]
    mismatches = [row for row in rows if row["all_match"] != "true"]

    print(f"{len(rows)} coprime pairs in {elapsed:.1f}s -> {args.output}")
    print(f"cases: {dict(sorted(cases.items()))}")
    print(f"packing density range: {min(packing)} .. {max(packing)}")
    print(f"covering density range: {min(covering)} .. {max(covering)}")
    print(f"formula/oracle mismatches: {len(mismatches)}")
    for row in mismatches:
        print("  MISMATCH", row)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
