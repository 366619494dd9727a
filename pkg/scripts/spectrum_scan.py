#!/usr/bin/env python3
"""Scan a lambda annulus around the predicted spectral disk and write CSV.

Example:
    python scripts/spectrum_scan.py --g "z^2" --inner 0.5 --outer 2.0 --out scan.csv
"""

import argparse
import sys

from fockvolterra.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g", default="z^2")
    ap.add_argument("--alpha", type=float, default=1.0)
    ap.add_argument("--A", type=float, default=2.0)
    ap.add_argument("--inner", type=float, default=0.5)
    ap.add_argument("--outer", type=float, default=2.0)
    ap.add_argument("--rings", type=int, default=4)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    argv = [
        "scan", "--g", args.g, "--alpha", str(args.alpha), "--A", str(args.A),
        "--grid-inner", str(args.inner), "--grid-outer", str(args.outer),
        "--grid-rings", str(args.rings), "--grid-count", str(args.count),
        "--format", "csv",
    ]
    if args.out:
        argv += ["--out", args.out]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
