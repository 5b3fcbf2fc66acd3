#!/usr/bin/env python3
"""Empirical coalescence-time scaling of the monotone up/down coupling.

Runs the coupling from (all-zero, all-k) on toroidal grids of growing
size and fits log T against log(n^2 log n); a slope near 1 supports the
quadratic-with-log mixing picture.  The slope is reported, not asserted.
"""

import argparse
import json
import math

import numpy as np

from kheights.coupling import coupling_time_estimate
from kheights.graphs import make_toroidal_rect


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="JSON report path (default: stdout)")
    args = ap.parse_args()

    rows = []
    for g in args.sizes:
        graph = make_toroidal_rect(g, g)
        est = coupling_time_estimate(graph, args.k, trials=args.trials,
                                     seed=args.seed)
        rows.append({"g": g, "n": graph.n, "mean": est["mean"],
                     "median": est["median"], "q90": est["q90"]})
        print(f"g={g:2d} n={graph.n:4d} mean={est['mean']:.0f} "
              f"median={est['median']:.0f}")

    xs = [math.log(r["n"] ** 2 * math.log(r["n"])) for r in rows]
    ys = [math.log(r["mean"]) for r in rows]
    slope, intercept = np.polyfit(xs, ys, 1)
    print(f"slope of log T vs log(n^2 log n): {slope:.3f} "
          f"(1.0 would match the predicted scaling)")
    report = {"k": args.k, "trials": args.trials, "seed": args.seed,
              "rows": rows, "slope": slope, "intercept": intercept}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)


if __name__ == "__main__":
    main()
