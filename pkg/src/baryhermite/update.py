"""O(N) update of the weights when one data item is added.

A new item at ``zeta`` is either the function value at a new grid point or
the next derivative at an existing point ``kappa``.  Every other point ``k``
sees its deleted-point polynomial gain the factor ``(z - zeta)``, which is
absorbed by a bidiagonal forward substitution on its weight row and cache.

Building a large interpolant purely by repeated updates imposes an ordering
on the grid points and can lose accuracy; prefer :func:`hermite_weights`
for the bulk of the data and use updates for a few late additions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (CacheEntry, DuplicatePoint, Grid, IntermediateCache,
                   WeightTable, _canonical)
from .counting import OpCounter
from .symmfunc import exact_div, ordered_sum
from .weights import _checked_reciprocal, hermite_weights


@dataclass(frozen=True)
class InterpolationState:
    grid: Grid
    weights: WeightTable
    cache: IntermediateCache

    @classmethod
    def from_grid(cls, grid: Grid, ops: OpCounter | None = None) -> "InterpolationState":
        weights, cache = hermite_weights(grid, ops)
        return cls(grid, weights, cache)


def shift_weights_row(w_row, d, ops: OpCounter | None = None) -> tuple:
    """Solve ``d w'_0 = w_0``, ``d w'_r + w'_{r-1} = w_r`` with ``d = z_k - zeta``."""
    if d == 0:
        raise ZeroDivisionError("new data item coincides with this grid point")
    out = [w_row[0] / d]
    for wr in w_row[1:]:
        out.append((wr - out[-1]) / d)
    if ops is not None:
        ops.tally("shift_weights", div=len(w_row), add=len(w_row) - 1)
    return tuple(out)


def update_cache_entry(entry: CacheEntry, zk, zeta, ops: OpCounter | None = None) -> CacheEntry:
    """Account for one more copy of ``1/(zeta - z_k)`` in the multiset of point ``k``."""
    d = zk - zeta
    if d == 0:
        raise ZeroDivisionError("new data item coincides with this grid point")
    C = entry.C / d
    e = zeta - zk
    a = 1 / e
    P, power = [], a
    for p in entry.P:
        P.append(p + power)
        power = power * a
    I = [entry.I[0]]
    for Ir in entry.I[1:]:
        I.append(Ir + I[-1] / e)
    if ops is not None:
        m = len(entry.P)
        ops.tally("update_cache", div=2 + m, add=1 + 2 * m, mul=m)
    return CacheEntry(C, tuple(P), tuple(I))


def new_point_weight(grid: Grid, zeta, ops: OpCounter | None = None):
    """``prod_k (zeta - z_k) ** -n_k``, the weight of a new simple point."""
    zeta = _canonical(zeta)
    if grid.index_of(zeta) is not None:
        raise DuplicatePoint(f"{zeta!r} is already a grid point")
    zprime = [zeta - zk for zk in grid.points]
    acc = 1
    for z, n in zip(zprime, grid.mults):
        for _ in range(n):
            acc = acc * z
    if ops is not None:
        ops.tally("new_point", add=grid.K, mul=grid.N, div=1)
    return _checked_reciprocal(acc, zprime, grid.mults, f"new point {zeta!r}")


def extend_existing_point(state: InterpolationState, kappa: int,
                          ops: OpCounter | None = None):
    """Next weight ``w[kappa][n]`` and the cache row extended by ``P_n``, ``I_n``.

    The multiset at ``kappa`` is unchanged, so the stored ``P_s`` and ``I_s``
    are reused and only ``P_n`` is formed from scratch, the same way the
    full algorithm forms it (running product from ``n_j`` in grid order).
    """
    grid, entry = state.grid, state.cache[kappa]
    n = entry.n
    zk = grid.points[kappa]
    terms = []
    for j, (zj, nj) in enumerate(zip(grid.points, grid.mults)):
        if j == kappa:
            continue
        zeta = -1 / (zk - zj)
        t = nj
        for _ in range(n):
            t = zeta * t
        terms.append(t)
    Pn = ordered_sum(terms)
    P = entry.P + (Pn,)
    acc = P[0] * entry.I[n - 1]
    for s in range(2, n + 1):
        acc = acc + P[s - 1] * entry.I[n - s]
    In = exact_div(acc, n)
    w_new = entry.C * In
    if ops is not None:
        m = len(terms)
        ops.tally("extend_point", add=m + max(m - 1, 0) + n - 1, mul=m * n + n + 1,
                  div=m + 1)
    return w_new, CacheEntry(entry.C, P, entry.I + (In,))


def add_data(state: InterpolationState, zeta, ops: OpCounter | None = None) -> InterpolationState:
    """Return the state after adding one data item at ``zeta``."""
    grid = state.grid
    zeta = Fraction(zeta) if isinstance(grid.points[0], Fraction) else _canonical(zeta)
    kappa = grid.index_of(zeta)

    rows, entries = [], []
    if kappa is not None:
        w_new, ext = extend_existing_point(state, kappa, ops)
    for k, zk in enumerate(grid.points):
        if k == kappa:
            rows.append(state.weights[k] + (w_new,))
            entries.append(ext)
            continue
        rows.append(shift_weights_row(state.weights[k], zk - zeta, ops))
        entries.append(update_cache_entry(state.cache[k], zk, zeta, ops))
    if ops is not None:
        ops.tally("differences", add=grid.K - (kappa is not None))

    if kappa is not None:
        mults = list(grid.mults)
        mults[kappa] += 1
        new_grid = Grid(grid.points, tuple(mults))
    else:
        C = new_point_weight(grid, zeta, ops)
        rows.append((C,))
        entries.append(CacheEntry(C, (), (1,)))
        new_grid = Grid(grid.points + (zeta,), grid.mults + (1,))
    return InterpolationState(new_grid, WeightTable(tuple(rows)), IntermediateCache(tuple(entries)))
