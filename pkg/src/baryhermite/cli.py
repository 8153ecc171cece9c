"""Command-line driver: ``baryhermite <command> [options]``.

Exit codes: 0 success, 1 numerical failure, 2 usage or input error.
Problem files are JSON ``{"points": [{"z": 0.5, "taylor": [f, f', f''/2, ...]}, ...]}``
holding Taylor coefficients ``f^(r)(z)/r!``; weight files are CSV ``k,z,r,w``
with 1-based ``k``.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .core import (BaryHermiteError, Grid, HermiteData, NumericalFailure, WeightTable,
                   validate_grid)
from .evaluate import sample_interpolant
from .experiments import (InterpConfig, chebyshev_problem, run_interpolation,
                          update_demo, weight_error)
from .functions import runge_taylor
from .grids import apply_permutation, leja_order, scale_problem
from .weights import hermite_weights

EXIT_OK, EXIT_NUMERICAL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Malformed problem or weight file; the message names the field."""


class FlushToZeroDetected(RuntimeError):
    pass


def fmt(x) -> str:
    return format(float(x), ".17g")


def check_fp_environment(divide=None) -> List[str]:
    """Probe for flush-to-zero and inexact division; raise if either is found.

    ``divide`` defaults to ordinary float division and exists so the probe
    itself can be exercised.
    """
    divide = divide or (lambda a, b: a / b)
    tiny = sys.float_info.min
    half = divide(tiny, 2.0)
    notes = []
    if half == 0.0 or half == tiny:
        raise FlushToZeroDetected(
            "subnormal numbers are flushed to zero; intermediate products in the "
            "weight computation will be wrong. Rebuild native extensions without "
            "-ffast-math / FTZ-DAZ and rerun.")
    notes.append(f"subnormals preserved: min_normal/2 = {half!r}")
    q = divide(1.0, 3.0)
    exact = Fraction(1, 3)
    if abs(Fraction(q) - exact) > abs(Fraction(math.nextafter(q, 1.0)) - exact) or \
            abs(Fraction(q) - exact) > abs(Fraction(math.nextafter(q, 0.0)) - exact):
        raise FlushToZeroDetected("float division is not correctly rounded")
    notes.append("division correctly rounded on sentinel 1/3")
    return notes


# ---- file formats ---------------------------------------------------------

def read_problem(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return parse_problem(doc)


def _number(v, field: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputError(f"{field} must be a number, got {v!r}")
    return float(v)


def parse_problem(doc):
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise InputError("points: expected a list of {z, taylor} objects")
    pts, rows = [], []
    for i, item in enumerate(doc["points"]):
        if not isinstance(item, dict):
            raise InputError(f"points[{i}]: expected an object")
        if "z" not in item:
            raise InputError(f"points[{i}].z: missing")
        pts.append(_number(item["z"], f"points[{i}].z"))
        taylor = item.get("taylor")
        if not isinstance(taylor, list) or not taylor:
            raise InputError(f"points[{i}].taylor: expected a non-empty list")
        rows.append(tuple(_number(c, f"points[{i}].taylor[{r}]") for r, c in enumerate(taylor)))
    try:
        grid = validate_grid(pts, [len(r) for r in rows])
    except BaryHermiteError as exc:
        raise InputError(f"points: {exc}") from exc
    return grid, HermiteData(tuple(rows))


def write_weights(out, grid: Grid, weights: WeightTable) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["k", "z", "r", "w"])
    for k, (z, row) in enumerate(zip(grid.points, weights.weights), start=1):
        for r, x in enumerate(row):
            w.writerow([k, fmt(z), r, fmt(x)])


def read_weights(path: str, grid: Grid) -> WeightTable:
    rows = [[] for _ in range(grid.K)]
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != ["k", "z", "r", "w"]:
                raise InputError(f"{path}: header must be k,z,r,w")
            for line, rec in enumerate(reader, start=2):
                try:
                    k, z, r, x = int(rec["k"]) - 1, float(rec["z"]), int(rec["r"]), float(rec["w"])
                except (TypeError, ValueError) as exc:
                    raise InputError(f"{path}:{line}: {exc}") from exc
                if not 0 <= k < grid.K or grid.points[k] != z:
                    raise InputError(f"{path}:{line}: k={k + 1}, z={z} does not match the grid")
                if r != len(rows[k]):
                    raise InputError(f"{path}:{line}: r={r} out of order for k={k + 1}")
                rows[k].append(x)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return WeightTable.from_rows(rows, grid)
    except BaryHermiteError as exc:
        raise InputError(f"{path}: {exc}") from exc


def write_cache(out, grid: Grid, cache) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["k", "z", "quantity", "r", "value"])
    for k, (z, e) in enumerate(zip(grid.points, cache.entries), start=1):
        w.writerow([k, fmt(z), "C", 0, fmt(e.C)])
        for r, p in enumerate(e.P, start=1):
            w.writerow([k, fmt(z), "P", r, fmt(p)])
        for r, i in enumerate(e.I):
            w.writerow([k, fmt(z), "I", r, fmt(i)])


def _open_out(path: Optional[str]):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _emit(path, writer_fn):
    out, close = _open_out(path)
    try:
        writer_fn(out)
    finally:
        if close:
            out.close()


def _prepare(args, leja_default: bool):
    grid, data = read_problem(args.grid)
    if args.scale is not None:
        grid, data = scale_problem(grid, data, args.scale)
    if args.leja if args.leja is not None else leja_default:
        grid, data = apply_permutation(grid, data, leja_order(grid.points))
    return grid, data


# ---- commands -------------------------------------------------------------

def cmd_weights(args) -> int:
    grid, _ = _prepare(args, leja_default=False)
    weights, cache = hermite_weights(grid)
    _emit(args.out, lambda out: write_weights(out, grid, weights))
    if args.cache:
        _emit(args.cache, lambda out: write_cache(out, grid, cache))
    return EXIT_OK


def _parse_floats(text: str) -> List[float]:
    try:
        return [float(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"--at: {exc}") from exc


def cmd_interp(args) -> int:
    grid, data = _prepare(args, leja_default=False)
    weights = read_weights(args.weights, grid) if args.weights else hermite_weights(grid)[0]
    if args.perturb:
        rng = random.Random(args.seed)
        weights = WeightTable(tuple(
            tuple(w * (1 + args.perturb * rng.uniform(-1, 1)) for w in row)
            for row in weights.weights))
    if args.at is not None:
        zs = [z for chunk in args.at for z in _parse_floats(chunk)]
    else:
        lo, hi = args.interval
        m = args.samples
        zs = [lo + (hi - lo) * i / (m - 1) for i in range(m)] if m > 1 else [lo]
    res = sample_interpolant(grid, weights, data, zs, form=args.form)

    def write(out):
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["z", "value", "error"])
        for z, v, e in zip(zs, res.values, res.errors):
            w.writerow([fmt(z), fmt(v), e or ""])
    _emit(args.out, write)
    return EXIT_OK if res.ok else EXIT_NUMERICAL


def _experiment(args, function: str) -> int:
    rows, per_sample = [], []
    for K in args.K:
        for n in args.n:
            cfg = InterpConfig(K, n, function, args.form, args.samples, leja=args.leja is not False)
            res = run_interpolation(cfg)
            rows.append((K, n, args.form, res.sup))
            per_sample.extend((K, n, x, e) for x, e in zip(res.x, res.error))

    def write(out):
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["K", "n", "form", "sup_error"])
        for K, n, form, sup in rows:
            w.writerow([K, n, form, fmt(sup)])
    _emit(args.out, write)
    if args.samples_out:
        def write_samples(out):
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["K", "n", "x", "abs_error"])
            for K, n, x, e in per_sample:
                w.writerow([K, n, fmt(x), fmt(e)])
        _emit(args.samples_out, write_samples)
    return EXIT_OK


def cmd_experiment_runge(args) -> int:
    return _experiment(args, "runge")


def cmd_experiment_hat(args) -> int:
    return _experiment(args, "hat")


def cmd_weight_error(args) -> int:
    results = [weight_error(K, n, leja=bool(args.leja)) for K in args.K for n in args.n]

    def write(out):
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["K", "n", "k", "r", "rel_error"])
        for res in results:
            for k, row in enumerate(res.errors, start=1):
                for r, e in enumerate(row):
                    w.writerow([res.K, res.n, k, r, fmt(e)])
    _emit(args.out, write)
    if args.summary:
        def write_summary(out):
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["K", "n", "max_rel_error"])
            for res in results:
                w.writerow([res.K, res.n, fmt(res.max)])
        _emit(args.summary, write_summary)
    return EXIT_OK


def cmd_update_demo(args) -> int:
    if args.grid:
        grid, _ = _prepare(args, leja_default=False)
    else:
        K, n = args.K[0], args.n[0]
        grid, _ = chebyshev_problem(K, n, runge_taylor, leja=args.leja is not False)
    inserts = [z for chunk in (args.insert or []) for z in _parse_floats(chunk)]
    steps = update_demo(grid, inserts)

    def write(out):
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["step", "zeta", "N", "max_rel_deviation", "ops", "ops_per_N"])
        for i, s in enumerate(steps, start=1):
            w.writerow([i, fmt(s.zeta), s.N, fmt(s.max_deviation), s.ops, fmt(s.ops / s.N)])
    _emit(args.out, write)
    return EXIT_OK


# ---- argument parsing -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="baryhermite", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, grid_required=True):
        sp.add_argument("--grid", required=grid_required, help="problem file (JSON)")
        sp.add_argument("--out", help="output CSV (default stdout)")
        sp.add_argument("--scale", type=float, help="multiply grid points by this factor")
        sp.add_argument("--leja", dest="leja", action="store_true", default=None)
        sp.add_argument("--no-leja", dest="leja", action="store_false")
        sp.add_argument("--seed", type=int, default=0)

    def sweep(sp, K_default, n_default):
        sp.add_argument("--K", type=int, nargs="+", default=K_default)
        sp.add_argument("--n", type=int, nargs="+", default=n_default)

    sp = sub.add_parser("weights", help="compute barycentric weights")
    common(sp)
    sp.add_argument("--cache", help="also write C_k, P_r, I_r to this CSV")
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("interp", help="evaluate the interpolant")
    common(sp)
    sp.add_argument("--weights", help="weights CSV (k,z,r,w); computed if omitted")
    sp.add_argument("--form", type=int, choices=(1, 2), default=2)
    sp.add_argument("--samples", type=int, default=101)
    sp.add_argument("--interval", type=float, nargs=2, default=(-1.0, 1.0), metavar=("A", "B"))
    sp.add_argument("--at", nargs="+", help="evaluation points (space or comma separated)")
    sp.add_argument("--perturb", type=float, default=0.0,
                    help="random relative perturbation of the weights (uses --seed)")
    sp.set_defaults(func=cmd_interp)

    for name, func, K_default, n_default in (
            ("experiment-runge", cmd_experiment_runge, [512], [48]),
            ("experiment-hat", cmd_experiment_hat, [16, 32, 64, 128, 256], [1])):
        sp = sub.add_parser(name, help=f"interpolation error sweep ({name[11:]} function)")
        common(sp, grid_required=False)
        sweep(sp, K_default, n_default)
        sp.add_argument("--form", type=int, choices=(1, 2), default=2)
        sp.add_argument("--samples", type=int, default=4096,
                        help="interior sample count; the end points are always added")
        sp.add_argument("--samples-out", help="per-sample errors CSV")
        sp.set_defaults(func=func, experiment=True)

    sp = sub.add_parser("weight-error", help="weight errors against exact rationals")
    common(sp, grid_required=False)
    sweep(sp, [16], [16])
    sp.add_argument("--summary", help="per-(K, n) maximum CSV")
    sp.set_defaults(func=cmd_weight_error, experiment=True)

    sp = sub.add_parser("update-demo", help="incremental vs from-scratch weights")
    common(sp, grid_required=False)
    sweep(sp, [16], [2])
    sp.add_argument("--insert", nargs="+", help="points at which to add one data item each")
    sp.set_defaults(func=cmd_update_demo, experiment=True)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        check_fp_environment()
    except FlushToZeroDetected as exc:
        print(f"baryhermite: {exc}", file=sys.stderr)
        if getattr(args, "experiment", False):
            return EXIT_NUMERICAL
    try:
        return args.func(args)
    except InputError as exc:
        print(f"baryhermite: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"baryhermite: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, ZeroDivisionError) as exc:
        print(f"baryhermite: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
