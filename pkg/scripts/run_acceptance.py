#!/usr/bin/env python3
"""Run the full acceptance suite and print one verdict line per criterion."""

import argparse
import sys

from translab.selftest import run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", nargs="*", help="substring filter on criteria")
    args = ap.parse_args()
    results = run_all(args.only)
    width = max(len(r.name) for r in results)
    total = 0.0
    worst = True
    for r in results:
        total += r.seconds
        worst = worst and r.passed
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  "
              f"{r.seconds:7.2f}s  {r.detail}")
    print(f"\n{'ALL PASS' if worst else 'FAILURES PRESENT'}  "
          f"({len(results)} criteria, {total:.1f}s)")
    return 0 if worst else 1


if __name__ == "__main__":
    sys.exit(main())
