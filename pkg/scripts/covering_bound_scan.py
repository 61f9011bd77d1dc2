#!/usr/bin/env python3
"""Scan covering densities of canonical k-point sets up to a diameter.

Reports the worst (largest) minimum covering density found and every set
attaining it.  Known extremes: 2/5 for 3-point sets (at {0,1,3}) and 1/3
for 4-point sets (at {0,1,2,4}).

Usage: python3 scripts/covering_bound_scan.py --size 3 --diam-max 10
"""

import argparse
import sys
import time
from fractions import Fraction

from batons.core import RoleKind, iter_canonical_batons
from batons.oracle import oracle_density


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=3)
    parser.add_argument("--diam-max", type=int, default=10)
    args = parser.parse_args()

    start = time.perf_counter()
    worst = Fraction(0)
    argmax = []
    count = 0
    for baton in iter_canonical_batons(args.size, args.diam_max):
        count += 1
        value, witness = oracle_density(baton, RoleKind.COVERING)
        if value > worst:
            worst, argmax = value, [(baton, witness)]
        elif value == worst:
            argmax.append((baton, witness))
    elapsed = time.perf_counter() - start

    print(f"{count} canonical {args.size}-point sets with diam <= {args.diam_max} "
          f"in {elapsed:.1f}s")
    print(f"max covering density: {worst}")
    for baton, witness in argmax:
        print(f"  {baton}  cover {witness}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
