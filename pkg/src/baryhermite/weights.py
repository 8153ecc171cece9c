"""Barycentric Hermite weights via inverse power sums.

For each grid point ``k`` the weights are ``w[k][r] = C_k * I_r(A_k)`` where
``C_k = prod_{j != k} (z_k - z_j) ** -n_j`` and ``I_r(A_k)`` are the series
coefficients generated by the multiset ``A_k`` of reciprocal differences.
"""

from __future__ import annotations

import math
from typing import Sequence, Tuple

from .core import (CacheEntry, Grid, IntermediateCache, OverflowToInf,
                   UnderflowToZero, WeightTable)
from .counting import OpCounter
from .symmfunc import inverse_poly, n_invert_list, power_sums


def find_pi(zprime: Sequence, mults: Sequence[int], ops: OpCounter | None = None):
    """``prod zprime[j] ** mults[j]`` by plain repeated multiplication in index order."""
    acc = 1
    for z, n in zip(zprime, mults):
        for _ in range(n):
            acc = acc * z
    if ops is not None:
        ops.tally("find_pi", mul=sum(mults[:len(zprime)]))
    return acc


def tracked_product(zprime: Sequence, mults: Sequence[int]) -> Tuple[float, int]:
    """``prod zprime[j] ** mults[j]`` as ``(mantissa, exponent)`` that never over/underflows."""
    m, e = 1.0, 0
    for z, n in zip(zprime, mults):
        fm, fe = math.frexp(float(z))
        for _ in range(n):
            m, de = math.frexp(m * fm)
            e += de + fe
    return m, e


def _log10_magnitude(zprime, mults) -> float:
    m, e = tracked_product(zprime, mults)
    if m == 0:
        return -math.inf
    return math.log10(abs(m)) + e * math.log10(2.0)


def difference_list(grid: Grid, k: int, ops: OpCounter | None = None):
    """``z_k - z_j`` and ``n_j`` for all ``j != k``: ``j < k`` first, then ``j > k``."""
    zk = grid.points[k]
    zprime = [zk - zj for j, zj in enumerate(grid.points) if j != k]
    mults = [n for j, n in enumerate(grid.mults) if j != k]
    if ops is not None:
        ops.tally("differences", add=len(zprime))
    return zprime, mults


def _checked_reciprocal(pi, zprime, mults, where: str):
    if isinstance(pi, int):
        return 1  # empty product; keep the scalar type of whatever it meets next
    if isinstance(pi, float):
        if pi == 0.0:
            raise OverflowToInf(
                f"{where}: product of differences underflowed, reciprocal is inf "
                f"(true magnitude about 1e{-_log10_magnitude(zprime, mults):.1f})")
        if math.isinf(pi):
            raise UnderflowToZero(
                f"{where}: product of differences overflowed, reciprocal is 0 "
                f"(true magnitude about 1e{-_log10_magnitude(zprime, mults):.1f})")
    C = 1 / pi
    if isinstance(C, float):
        if C == 0.0:
            raise UnderflowToZero(f"{where}: prefactor rounds to zero")
        if math.isinf(C):
            raise OverflowToInf(f"{where}: prefactor overflows")
    return C


def prefactor_C(grid: Grid, k: int, ops: OpCounter | None = None, _diffs=None):
    """``C_k = 1 / prod_{j != k} (z_k - z_j) ** n_j``.

    Raises :class:`UnderflowToZero` or :class:`OverflowToInf` instead of
    returning a meaningless 0 or inf; rescale the grid (``grids.scale_problem``)
    when that happens.
    """
    zprime, mults = _diffs if _diffs is not None else difference_list(grid, k)
    pi = find_pi(zprime, mults, ops)
    if ops is not None:
        ops.tally("prefactor", div=1)
    try:
        return _checked_reciprocal(pi, zprime, mults, f"grid point {k}")
    except (UnderflowToZero, OverflowToInf) as exc:
        exc.k = k
        raise


def _point_weights(grid: Grid, k: int, ops: OpCounter | None):
    diffs = difference_list(grid, k, ops)
    zprime, mults = diffs
    zetas = n_invert_list(zprime, ops)
    P = power_sums(zetas, mults, grid.mults[k] - 1, ops)
    I = inverse_poly(P, ops)
    C = prefactor_C(grid, k, ops, _diffs=diffs)
    w = tuple(C * Ir for Ir in I)
    if ops is not None:
        ops.tally("scale_weights", mul=len(I))
    return w, CacheEntry(C, tuple(P), tuple(I))


def hermite_weights(grid: Grid, ops: OpCounter | None = None):
    """Weights and intermediate cache for every grid point.

    Returns ``(WeightTable, IntermediateCache)``.  The per-point work is
    independent, so results do not depend on evaluation order.
    """
    rows, entries = [], []
    for k in range(grid.K):
        w, entry = _point_weights(grid, k, ops)
        rows.append(w)
        entries.append(entry)
    return WeightTable(tuple(rows)), IntermediateCache(tuple(entries))


def leading_order_ops(grid: Grid) -> int:
    """``2 N K + sum n_k^2``, the leading-order arithmetic cost."""
    return 2 * grid.N * grid.K + sum(n * n for n in grid.mults)


def count_ops(grid: Grid) -> OpCounter:
    """Run :func:`hermite_weights` with instrumentation and return the tallies."""
    ops = OpCounter()
    hermite_weights(grid, ops)
    return ops
