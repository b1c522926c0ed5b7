#!/usr/bin/env python3
"""Finite-range scan of the rank-3 family: for each m up to a limit,
test whether the diagonal member (alpha, beta, gamma) = (4m^3, 0, m) is
obstructed by the three-squares criterion, and report the observed
fraction.  Demonstration only — prints statistics, asserts nothing.

Usage: python3 scripts/density_scan.py [--limit 600] [--verbose]
"""

from __future__ import annotations

import argparse

from superlat.isometry import family_obstruction


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=600, help="scan m = 1..limit")
    parser.add_argument("--verbose", action="store_true", help="print each obstructed m")
    args = parser.parse_args()

    obstructed = []
    for m in range(1, args.limit + 1):
        cert = family_obstruction("three_squares_rank3", m=m)
        if cert.verdict == "ObstructionThreeSquares":
            obstructed.append(m)
            if args.verbose:
                print(f"m = {m:5d}  reduced = {cert.detail['reduced']}")

    count, total = len(obstructed), args.limit
    print(f"range scanned: m = 1..{total}")
    print(f"obstructed: {count} ({count / total:.4f} of the range)")
    if obstructed:
        residues = sorted({m % 16 for m in obstructed})
        print(f"obstructed m residues mod 16: {residues}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
