#!/usr/bin/env python3
"""Certified zeta values: closed forms for zeta(2n), the conjugate-Bernoulli
quadrature route for zeta(2n+1), and agreement with truncated-series bands."""

import argparse
import time

from translab.bernoulli import (zeta_even_cf, zeta_odd_via_conj,
                                zeta_truncated_enclosure)
from translab.closedform import enclose


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--precision", type=int, default=256)
    ap.add_argument("--trunc", type=int, default=200_000)
    ap.add_argument("--max-even", type=int, default=6)
    ap.add_argument("--max-odd", type=int, default=3)
    args = ap.parse_args()

    for n in range(1, args.max_even + 1):
        t0 = time.time()
        cf = zeta_even_cf(n)
        ball = enclose(cf, args.precision)
        lo, hi = zeta_truncated_enclosure(2 * n, args.trunc)
        ok = lo <= ball.upper() and ball.lower() <= hi
        print(f"zeta({2*n:2d}) = {str(cf):24s} -> {ball}  "
              f"[series band: {'ok' if ok else 'MISS'}; {time.time()-t0:.2f}s]")

    for n in range(1, args.max_odd + 1):
        t0 = time.time()
        ball = zeta_odd_via_conj(n, args.precision)
        lo, hi = zeta_truncated_enclosure(2 * n + 1, args.trunc)
        ok = lo <= ball.upper() and ball.lower() <= hi
        print(f"zeta({2*n+1:2d}) = {ball}  "
              f"[series band: {'ok' if ok else 'MISS'}; {time.time()-t0:.2f}s]")


if __name__ == "__main__":
    main()
