"""Evaluation of the interpolant in the first and second barycentric forms.

Both forms are built from the Horner partials in ``1/(z - z_k)``

    V_{k,m}(z) = sum_{r<=m} w_{k,r} (z - z_k) ** -(m - r + 1),

with ``D_k = V_{k,n_k-1}`` and ``N_k = sum_s c_{k,s} V_{k,n_k-1-s}``.  The first
form is ``prod_k (z - z_k) ** n_k * sum_k N_k``; the second is
``sum_k N_k / sum_k D_k``.  Because ``N_k`` reuses the very partials that
make up ``D_k``, the rounding errors of the second form's numerator and
denominator are correlated and largely cancel in the quotient; this is
what keeps it accurate next to the end points where ``D_k`` suffers
heavy cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .core import (Grid, HermiteData, NonFiniteResult,
                   WeightTable, ZeroDenominator)


def _point_sums(wrow, crow, d):
    """``(N_k, D_k)`` for one grid point at offset ``d = z - z_k``."""
    V = [wrow[0] / d]
    for w in wrow[1:]:
        V.append((V[-1] + w) / d)
    n = len(V)
    num = crow[0] * V[n - 1]
    for s in range(1, n):
        num = num + crow[s] * V[n - 1 - s]
    return num, V[n - 1]


def _sums(grid, weights, data, ds):
    num = den = 0
    for wrow, crow, d in zip(weights.weights, data.coeffs, ds):
        nk, dk = _point_sums(wrow, crow, d)
        num = num + nk
        den = den + dk
    return num, den


def prefactor_pi_star(grid: Grid, z):
    """``prod_k (z - z_k) ** n_k`` in grid order."""
    acc = 1
    for zk, n in zip(grid.points, grid.mults):
        d = z - zk
        for _ in range(n):
            acc = acc * d
    return acc


def _check(grid, weights, data):
    weights.check(grid)
    data.check(grid)


def eval_first_form(grid: Grid, weights: WeightTable, data: HermiteData, z):
    _check(grid, weights, data)
    k = grid.index_of(z)
    if k is not None:
        return data.coeffs[k][0]
    ds = [z - zk for zk in grid.points]
    num, _ = _sums(grid, weights, data, ds)
    value = prefactor_pi_star(grid, z) * num
    if isinstance(value, float) and not np.isfinite(value):
        raise NonFiniteResult(f"first form at z={z!r} gave {value}")
    return value


def eval_second_form(grid: Grid, weights: WeightTable, data: HermiteData, z):
    _check(grid, weights, data)
    k = grid.index_of(z)
    if k is not None:
        return data.coeffs[k][0]
    ds = [z - zk for zk in grid.points]
    num, den = _sums(grid, weights, data, ds)
    if den == 0:
        raise ZeroDenominator(f"second-form denominator vanishes at z={z!r}")
    value = num / den
    if isinstance(value, float) and not np.isfinite(value):
        raise NonFiniteResult(f"second form at z={z!r} gave {value}")
    return value


@dataclass
class SampleResult:
    values: np.ndarray
    errors: List[Optional[str]]

    @property
    def ok(self) -> bool:
        return all(e is None for e in self.errors)


def sample_interpolant(grid: Grid, weights: WeightTable, data: HermiteData,
                       zs: Sequence[float], form: int = 2) -> SampleResult:
    """Evaluate at every point of ``zs`` (vectorised over the samples).

    Elementwise arithmetic matches :func:`eval_first_form` /
    :func:`eval_second_form` operation for operation.
    """
    if form not in (1, 2):
        raise ValueError(f"form must be 1 or 2, got {form!r}")
    _check(grid, weights, data)
    z = np.asarray(zs, dtype=float).ravel()
    if z.size == 0:
        return SampleResult(np.empty(0), [])
    points = np.asarray(grid.points, dtype=float)
    node_of = np.full(z.shape, -1)
    for k, zk in enumerate(points):
        node_of[z == zk] = k
    at_node = node_of >= 0
    zsafe = np.where(at_node, np.inf, z)

    with np.errstate(all="ignore"):
        ds = [zsafe - zk for zk in points]
        num, den = _sums(grid, weights, data, ds)
        if form == 1:
            values = prefactor_pi_star(grid, zsafe) * num
        else:
            values = num / den

    values = np.asarray(values, dtype=float)
    errors: List[Optional[str]] = [None] * z.size
    for i in np.flatnonzero(~at_node):
        if form == 2 and den[i] == 0:
            errors[i] = "ZeroDenominator"
        elif not np.isfinite(values[i]):
            errors[i] = "NonFiniteResult"
    for i in np.flatnonzero(at_node):
        values[i] = data.coeffs[node_of[i]][0]
    return SampleResult(values, errors)
