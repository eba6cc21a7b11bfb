#!/usr/bin/env python3
"""Grid check of the normalized A_n monotonicity and of Phi >= 0 for a range of n."""
import argparse

from bombieri.trig_core import check_lemma3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=60)
    ap.add_argument("--grid", type=int, default=100_000)
    args = ap.parse_args()

    print(f"{'n':>3} {'ratio_margin':>14} {'t':>10} {'Phi_min':>14} {'t':>10}")
    failed = []
    for n in range(2, args.nmax + 1):
        r = check_lemma3(n, args.grid)
        print(f"{n:>3} {r.ratio_margin:>14.4e} {r.ratio_witness:>10.6f} {r.phi_margin:>14.4e} {r.phi_witness:>10.6f}")
        if not r.passed:
            failed.append(n)
    print("all passed" if not failed else f"failed: {failed}")


if __name__ == "__main__":
    main()
