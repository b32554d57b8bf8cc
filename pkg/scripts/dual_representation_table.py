#!/usr/bin/env python3
"""Cross-validate the two representations of F^(k)(s) = (d/ds)^k log L(s, chi).

For a grid of discriminants, points s, and orders k, evaluate the prime-power
series and the zero-sum formula independently and print the residual next to
the combined error bound.  Every row should satisfy |residual| <= bound.
"""

import argparse

from lmono import (
    RealPrimitiveCharacter,
    f_deriv_series,
    f_deriv_zerosum,
    f_prime_formula,
    mark_complete,
    scan_zeros,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--discriminants", default="-4,-3,5,-8")
    ap.add_argument("-T", type=float, default=100.0)
    ap.add_argument("--s", default="2,3,5,10")
    ap.add_argument("--k", default="1,2,3,8")
    args = ap.parse_args()

    header = f"{'d':>4} {'s':>6} {'k':>3} {'series':>22} {'zerosum':>22} {'residual':>10} {'bound':>10}"
    print(header)
    print("-" * len(header))
    worst = 0.0
    for d in (int(x) for x in args.discriminants.split(",")):
        chi = RealPrimitiveCharacter(d)
        zlist = mark_complete(chi, scan_zeros(chi, args.T))
        assert zlist.complete
        for s in (float(x) for x in args.s.split(",")):
            for k in (int(x) for x in args.k.split(",")):
                ser = f_deriv_series(chi, s, k)
                zs = (
                    f_prime_formula(chi, s, zlist)
                    if k == 1
                    else f_deriv_zerosum(chi, s, k, zlist)
                )
                res = abs(ser.value - zs.value)
                bound = ser.error_bound + zs.error_bound
                worst = max(worst, res)
                flag = "" if res <= bound else "  <-- BOUND VIOLATION"
                print(
                    f"{d:>4} {s:>6g} {k:>3} {ser.value:>22.15g} "
                    f"{zs.value:>22.15g} {res:>10.2e} {bound:>10.2e}{flag}"
                )
    print(f"\nworst residual: {worst:.3e}")


if __name__ == "__main__":
    main()
