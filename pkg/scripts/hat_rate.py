"""Error of the hat-function interpolant under K doubling (expect a ratio near 1/2)."""

import argparse
import sys

from baryhermite.experiments import error_vs_K


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", type=int, nargs="+", default=[16, 32, 64, 128, 256, 512])
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 4])
    ap.add_argument("--samples", type=int, default=4096)
    args = ap.parse_args()

    print("n,K,sup_error,ratio_to_previous")
    for n in args.n:
        prev = None
        for res in error_vs_K("hat", n, args.K, samples=args.samples):
            ratio = "" if prev is None else f"{res.sup / prev:.3f}"
            print(f"{n},{res.config.K},{res.sup:.6e},{ratio}")
            sys.stdout.flush()
            prev = res.sup


if __name__ == "__main__":
    main()
