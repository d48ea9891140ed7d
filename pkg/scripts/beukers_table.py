#!/usr/bin/env python3
"""Tabulate the Beukers contradiction engine for zeta(2) and zeta(3).

For each n the exact integers A_n, B_n satisfy I_n = (A_n zeta + B_n)/d_n^e
with |I_n| below a geometrically shrinking bound; the product |I_n| d_n^e
must shrink geometrically too (rate < 0.95) for the irrationality argument
to close.  The table shows the shrinkage and the effective d_n^(1/n).
"""

import argparse

from translab.irrationality import beukers_certificate, irrationality_gap_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--target", choices=["zeta2", "zeta3"], default="zeta3")
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--precision", type=int, default=128)
    args = ap.parse_args()

    e = 2 if args.target == "zeta2" else 3
    print(f"target {args.target} (scaling d_n^{e})")
    print(f"{'n':>3} {'d_n':>12} {'A_n digits':>10} {'|I_n| <=':>12} "
          f"{'s_n = |I|d^e <=':>16} {'d^(1/n)':>8}")
    for n in range(1, args.n_max + 1):
        cert = beukers_certificate(args.target, n, args.precision)
        absI = abs(cert.I)
        s = float(absI.upper()) * cert.d**e
        print(f"{n:>3} {cert.d:>12} {len(str(abs(cert.A))):>10} "
              f"{float(absI.upper()):>12.3e} {s:>16.3e} "
              f"{float(cert.d) ** (1 / n):>8.4f}")
    rep = irrationality_gap_report(args.target, args.n_max, args.precision)
    print(f"\ngeometric-mean rate ball: {rep.rate}")
    print(f"certified inside (0, 0.95): {rep.rate_in_unit_interval}")


if __name__ == "__main__":
    main()
