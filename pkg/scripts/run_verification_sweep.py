#!/usr/bin/env python3
"""Run the full claim suite across the standard desk-scale instances and
print one summary row per instance, with an optional JSON dump of every
claim.

Usage:
    python scripts/run_verification_sweep.py [--json OUT.json] [--big]

--big adds the n = 11 instance (hundreds of thousands of pairwise
distances; expect a few minutes).
"""

from __future__ import annotations

import argparse
import json
import sys
from time import perf_counter

import flagcodes as fc

INSTANCES: list[tuple[int, int, int, int]] = [
    (2, 2, 0, 2),
    (2, 2, 1, 2),
    (2, 3, 2, 2),
    (3, 2, 1, 2),
    (2, 2, 0, 3),
    (2, 2, 1, 3),
    (2, 2, 1, 4),
]

BIG_INSTANCES: list[tuple[int, int, int, int]] = [
    (2, 2, 1, 5),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", help="write all claims to this JSON file")
    parser.add_argument("--big", action="store_true", help="include the n = 11 instance")
    parser.add_argument("--poly-choice", type=int, default=0)
    args = parser.parse_args()

    grid = INSTANCES + (BIG_INSTANCES if args.big else [])
    reports = []
    all_ok = True
    print(f"{'q':>2} {'k':>2} {'h':>2} {'s':>2} {'n':>3} {'|C|':>5} {'claims':>6} "
          f"{'failed':>6} {'time':>8}")
    for q, k, h, s in grid:
        params = fc.ConstructionParams.make(q, k, h, s, poly_choice=args.poly_choice)
        start = perf_counter()
        rep = fc.run_claim_suite(params)
        elapsed = perf_counter() - start
        reports.append(rep)
        t = rep.totals
        all_ok &= rep.all_pass
        print(f"{q:>2} {k:>2} {h:>2} {s:>2} {params.n:>3} {params.expected_size:>5} "
              f"{t['claims']:>6} {t['failed']:>6} {elapsed:>7.2f}s")
        for claim in rep.claims:
            if not claim.passed:
                print(f"    FAIL {claim.claim_id}: expected {claim.expected!r}, "
                      f"got {claim.computed!r}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"reports": [r.to_json_obj() for r in reports]}, fh, indent=2)
        print(f"claims written to {args.json}")
    print("ALL PASS" if all_ok else "FAILURES PRESENT")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
