"""Relative error of double-precision weights against exact rational weights.

The oracle cost grows quickly with n; K=16, n=16 takes several seconds.
"""

import argparse

from baryhermite.experiments import weight_error


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", type=int, default=16)
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 4, 8, 16])
    ap.add_argument("--leja", action="store_true")
    ap.add_argument("--table", action="store_true", help="also print the per-(k, r) errors")
    args = ap.parse_args()

    print("K,n,max_rel_error,seconds")
    results = []
    for n in args.n:
        res = weight_error(args.K, n, leja=args.leja)
        results.append(res)
        print(f"{res.K},{res.n},{res.max:.3e},{res.seconds:.1f}", flush=True)
    if args.table:
        print("K,n,k,r,rel_error")
        for res in results:
            for k, row in enumerate(res.errors, start=1):
                for r, e in enumerate(row):
                    print(f"{res.K},{res.n},{k},{r},{e:.3e}")


if __name__ == "__main__":
    main()
