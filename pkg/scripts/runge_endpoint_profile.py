"""Pointwise error of both barycentric forms for a large Runge problem.

The first form loses several digits at x = +-1; the second form does not.
"""

import argparse
import csv
import sys

import numpy as np

from baryhermite.experiments import InterpConfig, chebyshev_problem, run_interpolation
from baryhermite.functions import runge_taylor
from baryhermite.weights import hermite_weights


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", type=int, default=512)
    ap.add_argument("--n", type=int, default=48)
    ap.add_argument("--samples", type=int, default=4096)
    ap.add_argument("--out", help="per-sample CSV; summary goes to stderr")
    args = ap.parse_args()

    problem = chebyshev_problem(args.K, args.n, runge_taylor)
    weights, _ = hermite_weights(problem[0])
    runs = {form: run_interpolation(InterpConfig(args.K, args.n, form=form, samples=args.samples),
                                    weights=weights, problem=problem)
            for form in (1, 2)}

    x = runs[1].x
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    out = csv.writer(fh, lineterminator="\n")
    out.writerow(["x", "error_first_form", "error_second_form"])
    for i, xi in enumerate(x):
        out.writerow([f"{xi:.17g}", f"{runs[1].error[i]:.6e}", f"{runs[2].error[i]:.6e}"])
    if args.out:
        fh.close()

    inner = np.abs(x) <= 0.99
    for form, res in runs.items():
        print(f"form {form}: sup {res.sup:.2e}, interior median {np.median(res.error[inner]):.2e}, "
              f"x=-1 {res.error[0]:.2e}, x=1 {res.error[-1]:.2e}", file=sys.stderr)


if __name__ == "__main__":
    main()
