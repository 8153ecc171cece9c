"""Cost and accuracy of single-item updates versus recomputing all weights."""

import argparse
import time

from baryhermite.core import validate_grid
from baryhermite.counting import OpCounter
from baryhermite.experiments import max_relative_deviation
from baryhermite.grids import chebyshev_points
from baryhermite.update import InterpolationState, add_data
from baryhermite.weights import hermite_weights


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--N", type=int, nargs="+", default=[16, 64, 256, 1024])
    args = ap.parse_args()

    print("N,case,ops,ops_per_N,update_s,scratch_s,max_rel_deviation")
    for N in args.N:
        K = max(N // args.n, 1)
        grid = validate_grid([2 * z for z in chebyshev_points(K)], [args.n] * K)
        state = InterpolationState.from_grid(grid)
        for case, zeta in (("new point", 0.123), ("extra derivative", grid.points[0])):
            ops = OpCounter()
            t0 = time.perf_counter()
            new = add_data(state, zeta, ops)
            t1 = time.perf_counter()
            scratch, _ = hermite_weights(new.grid)
            t2 = time.perf_counter()
            dev = max_relative_deviation(new.weights, scratch)
            print(f"{grid.N},{case},{ops.total},{ops.total / grid.N:.2f},"
                  f"{t1 - t0:.4f},{t2 - t1:.4f},{dev:.2e}", flush=True)


if __name__ == "__main__":
    main()
