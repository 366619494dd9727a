#!/usr/bin/env python3
"""Print the power-norm spectral radius estimate as the basis cutoff grows.

For a monomial symbol b z^A (integer A, p = 2) the estimate climbs
monotonically toward |b|/alpha, the radius of the spectral disk.
"""

import argparse

from fockvolterra import FockParams, spectral_radius_estimate
from fockvolterra.symparse import parse_symbol


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g", default="z^2")
    ap.add_argument("--alpha", type=float, default=1.0)
    ap.add_argument("--k-max", type=int, default=32)
    ap.add_argument("--max-m", type=int, nargs="+", default=[32, 64, 128, 256, 512])
    args = ap.parse_args()

    g, _ = parse_symbol(args.g)
    params = FockParams(2.0, args.alpha, float(g.degree))
    target = abs(g.leading_coefficient) / args.alpha
    print(f"target |b|/alpha = {target:.6f}")
    print("max_m,estimate,relative_gap")
    for m in args.max_m:
        est, _ = spectral_radius_estimate(g, params, args.k_max, m)
        print(f"{m},{est:.10f},{abs(est / target - 1):.3e}")


if __name__ == "__main__":
    main()
