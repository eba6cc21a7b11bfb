#!/usr/bin/env python3
"""Scan all pairs up to M, write the CSV and print the m-odd/n-even summary."""
import argparse
import time

from bombieri.scanner import DEFAULT_MAX, conjecture_report, records_to_csv, scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=79)
    ap.add_argument("--out", default="scan.csv")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    records = scan(args.max, workers=args.workers)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(records_to_csv(records))
    rep = conjecture_report(records)
    print(rep.table())
    for r in rep.equal_beyond_line:
        print(f"  ({r.m},{r.n}): 5n - (4m+2) = {5 * r.n - 4 * r.m - 2}, margin {r.margin:.4g}")
    print(f"{len(records)} pairs in {time.perf_counter() - t0:.1f} s -> {args.out}")


if __name__ == "__main__":
    main()
