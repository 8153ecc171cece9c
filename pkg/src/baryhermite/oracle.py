"""Exact-rational ground truth for weights, interpolant values and series.

Nothing here shares code with the floating-point kernels: weights come from
truncated power-series products and long division, values from the
expanded first-form sum.  Binary64 inputs are converted to the rationals
they represent exactly, so the oracle answers what a given floating grid
*should* produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .core import (DuplicatePoint, Grid, PreconditionViolated, ShapeMismatch,
                   WeightTable)

UNIT_ROUNDOFF = Fraction(1, 2 ** 53)


class ZeroLeadingDenominatorCoefficient(ArithmeticError):
    pass


def to_rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rational_grid(grid: Grid) -> Grid:
    pts = [to_rational(z) for z in grid.points]
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("grid points are not distinct")
    return Grid(tuple(pts), grid.mults)


def _series_mul(a, b, m):
    out = [Fraction(0)] * (m + 1)
    for i, ai in enumerate(a[:m + 1]):
        if ai:
            for j, bj in enumerate(b[:m + 1 - i]):
                out[i + j] += ai * bj
    return out


def _series_inv(a, m):
    if a[0] == 0:
        raise ZeroLeadingDenominatorCoefficient("series has zero constant term")
    out = []
    for r in range(m + 1):
        acc = Fraction(1 if r == 0 else 0)
        for i in range(1, min(r, len(a) - 1) + 1):
            acc -= a[i] * out[r - i]
        out.append(acc / a[0])
    return out


def _shifted_power_series(delta, p, m):
    """Coefficients of ``(delta + t) ** p`` in ``t`` up to ``t^m`` (p any integer)."""
    out, c = [], delta ** p
    for i in range(m + 1):
        out.append(c)
        # next binomial term: c * (p - i) / ((i + 1) delta)
        c = c * (p - i) / ((i + 1) * delta)
    return out


def _pi_k_series(grid: Grid, k: int, m: int):
    """Taylor coefficients of ``prod_{j != k} (z - z_j)^{n_j}`` about ``z_k``."""
    zk = grid.points[k]
    acc = [Fraction(1)] + [Fraction(0)] * m
    for j, (zj, nj) in enumerate(zip(grid.points, grid.mults)):
        if j == k:
            continue
        d = zk - zj
        for _ in range(nj):
            # multiply by (d + t)
            for i in range(m, 0, -1):
                acc[i] = acc[i] * d + acc[i - 1]
            acc[0] = acc[0] * d
    return acc


def exact_weights(grid: Grid) -> WeightTable:
    """Exact weights: truncated Taylor inverse of ``pi_k`` about each ``z_k``."""
    g = rational_grid(grid)
    rows = []
    for k, n in enumerate(g.mults):
        rows.append(tuple(_series_inv(_pi_k_series(g, k, n - 1), n - 1)))
    return WeightTable(tuple(rows))


def exact_interpolant_eval(grid: Grid, data, z):
    """Exact first-form value at a rational ``z`` that is not a grid point."""
    g = rational_grid(grid)
    z = to_rational(z)
    if z in g.points:
        return to_rational(data.coeffs[g.points.index(z)][0])
    w = exact_weights(g)
    total = Fraction(0)
    for zk, nk, wrow, crow in zip(g.points, g.mults, w.weights, data.coeffs):
        d = z - zk
        for s in range(nk):
            for r in range(nk - s):
                total += to_rational(crow[s]) * wrow[r] / d ** (nk - r - s)
    pi_star = Fraction(1)
    for zk, nk in zip(g.points, g.mults):
        pi_star *= (z - zk) ** nk
    return pi_star * total


def partition_of_unity(grid: Grid, weights: WeightTable, z) -> Fraction:
    """``sum_k pi_k(z) W_k(z)`` in exact arithmetic; identically 1 for exact weights."""
    g = rational_grid(grid)
    z = to_rational(z)
    total = Fraction(0)
    for k, (zk, wrow) in enumerate(zip(g.points, weights.weights)):
        pik = Fraction(1)
        for j, (zj, nj) in enumerate(zip(g.points, g.mults)):
            if j != k:
                pik *= (z - zj) ** nj
        Wk = sum((to_rational(w) * (z - zk) ** r for r, w in enumerate(wrow)), Fraction(0))
        total += pik * Wk
    return total


def exact_second_form_series(grid: Grid, weights: WeightTable, data, k: int, m: int) -> List[Fraction]:
    """Taylor coefficients ``0..m`` of the second-form rational function about ``z_k``.

    Numerator and denominator are both multiplied by ``t^{n_k}``,
    ``t = z - z_k``; every term of every point is expanded in ``t`` and the
    two truncated series are divided exactly.
    """
    g = rational_grid(grid)
    zk, nk = g.points[k], g.mults[k]
    if any(to_rational(row[0]) == 0 for row in weights.weights):
        raise ZeroLeadingDenominatorCoefficient("all w_(k,0) must be nonzero")

    def term(l, p):
        # t^{n_k} (z - z_l)^p as a series in t
        out = [Fraction(0)] * (m + 1)
        if l == k:
            if nk + p <= m:
                out[nk + p] = Fraction(1)
        else:
            base = _shifted_power_series(zk - g.points[l], p, m)
            for i in range(nk, m + 1):
                out[i] = base[i - nk]
        return out

    num = [Fraction(0)] * (m + 1)
    den = [Fraction(0)] * (m + 1)
    for l, (nl, wrow, crow) in enumerate(zip(g.mults, weights.weights, data.coeffs)):
        wrow = [to_rational(x) for x in wrow]
        crow = [to_rational(x) for x in crow]
        for r in range(nl):
            for i, v in enumerate(term(l, r - nl)):
                den[i] += wrow[r] * v
            for s in range(nl - r):
                coef = crow[s] * wrow[r]
                if coef:
                    for i, v in enumerate(term(l, r + s - nl)):
                        num[i] += coef * v
    return _series_mul(num, _series_inv(den, m), m)


@dataclass
class WeightErrors:
    """Per-entry errors; entries whose exact weight is 0 hold absolute errors."""

    values: List[List[float]]
    absolute: set

    @property
    def max(self) -> float:
        return max((v for (k, row) in enumerate(self.values) for (r, v) in enumerate(row)
                    if (k, r) not in self.absolute), default=0.0)


def relative_errors(computed: WeightTable, exact: WeightTable) -> WeightErrors:
    if len(computed.weights) != len(exact.weights) or any(
            len(a) != len(b) for a, b in zip(computed.weights, exact.weights)):
        raise ShapeMismatch("weight tables differ in shape")
    values, absolute = [], set()
    for k, (crow, erow) in enumerate(zip(computed.weights, exact.weights)):
        row = []
        for r, (c, e) in enumerate(zip(crow, erow)):
            diff = abs(to_rational(c) - to_rational(e))
            if e == 0:
                absolute.add((k, r))
                row.append(float(diff))
            else:
                row.append(float(diff / abs(to_rational(e))))
        values.append(row)
    return WeightErrors(values, absolute)


@dataclass(frozen=True)
class GammaBound:
    n: int
    u: Fraction
    value: float


def gamma_bound(n: int) -> GammaBound:
    """``gamma_n = n u / (1 - n u)`` with ``u = 2**-53``."""
    nu = n * UNIT_ROUNDOFF
    if n < 0 or nu >= 1:
        raise PreconditionViolated(f"gamma_{n} needs 0 <= n u < 1")
    return GammaBound(n, UNIT_ROUNDOFF, float(nu / (1 - nu)))
