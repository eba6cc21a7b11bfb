#!/usr/bin/env python3
"""Root moduli, Dieudonne verdicts and starlike margins for the extremal family."""
import argparse

from bombieri.univalence import (
    dieudonne_check, family_poly, family_root_modulus, starlike_check, zeros_in_unit_disk,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=30)
    args = ap.parse_args()

    print(f"{'n':>3} {'|root| closed':>18} {'numeric - closed':>17} {'dieudonne':>18} {'min Re zf/f':>12}")
    for n in range(2, args.nmax + 1):
        f = family_poly(n)
        closed = family_root_modulus(n)
        numeric = zeros_in_unit_disk(f.shift_down()).min_root_modulus
        status = dieudonne_check(f).status.value
        star = starlike_check(f)
        print(f"{n:>3} {closed:>18.15f} {numeric - closed:>17.2e} {status:>18} {star.margin:>12.4e}")


if __name__ == "__main__":
    main()
