"""Sup-norm error of the Runge interpolant as K grows, for several n."""

import argparse
import csv
import sys

from baryhermite.experiments import error_vs_K


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128, 256, 512])
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 4, 8])
    ap.add_argument("--form", type=int, choices=(1, 2), default=2)
    ap.add_argument("--samples", type=int, default=4096)
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "K", "sup_error", "seconds"])
    for n in args.n:
        for res in error_vs_K("runge", n, args.K, args.form, args.samples):
            out.writerow([n, res.config.K, f"{res.sup:.6e}", f"{res.seconds:.2f}"])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
