"""Chebyshev grids, capacity scaling and Leja ordering."""

from __future__ import annotations

import math
from typing import List, Sequence, Tuple

from .core import Grid, HermiteData, InvalidPermutation, validate_grid


def chebyshev_points(K: int) -> List[float]:
    """``cos((2k - 1) pi / 2K)`` for ``k = 1..K``, in that order."""
    if K < 1:
        raise ValueError("K must be at least 1")
    return [math.cos((2 * k - 1) * math.pi / (2 * K)) for k in range(1, K + 1)]


def scale_problem(grid: Grid, data: HermiteData, sigma) -> Tuple[Grid, HermiteData]:
    """Map ``z -> sigma z`` and rescale the Taylor data of ``g(w) = f(w / sigma)``.

    On ``[-1, 1]`` use ``sigma = 2``: the image ``[-2, 2]`` has capacity 1,
    which keeps products of point differences near unit size.
    """
    if not sigma > 0:
        raise ValueError(f"scale must be positive, got {sigma!r}")
    points = [sigma * z for z in grid.points]
    rows = []
    for row in data.coeffs:
        scaled, power = [], 1
        for c in row:
            scaled.append(c / power)
            power = power * sigma
        rows.append(tuple(scaled))
    return validate_grid(points, grid.mults), HermiteData(tuple(rows))


def _tracked(x: float):
    m, e = math.frexp(x)
    return m, e


def _tracked_mul(a, b):
    m, e = math.frexp(a[0] * b[0])
    return m, e + a[1] + b[1]


def _tracked_gt(a, b) -> bool:
    # mantissas are in [0.5, 1) or exactly 0
    if a[0] == 0 or b[0] == 0:
        return a[0] > b[0]
    if a[1] != b[1]:
        return a[1] > b[1]
    return a[0] > b[0]


def leja_order(points: Sequence[float]) -> List[int]:
    """Greedy Leja permutation (0-based indices into ``points``).

    Starts from the point of largest magnitude; each next point maximises
    the product of distances to those already chosen.  Ties go to the
    smallest original index.  Products are kept as (mantissa, exponent)
    so the ordering is valid for grids whose products leave double range.
    """
    K = len(points)
    if K == 0:
        return []
    first = max(range(K), key=lambda i: (abs(points[i]), -i))
    order = [first]
    remaining = [i for i in range(K) if i != first]
    prods = {i: _tracked(abs(points[i] - points[first])) for i in remaining}
    while remaining:
        best = remaining[0]
        for i in remaining[1:]:
            if _tracked_gt(prods[i], prods[best]):
                best = i
        order.append(best)
        remaining.remove(best)
        zb = points[best]
        for i in remaining:
            prods[i] = _tracked_mul(prods[i], _tracked(abs(points[i] - zb)))
    return order


def apply_permutation(grid: Grid, data: HermiteData, perm: Sequence[int]) -> Tuple[Grid, HermiteData]:
    """Reorder grid points and data rows so that new row ``i`` is old row ``perm[i]``."""
    perm = list(perm)
    if sorted(perm) != list(range(grid.K)):
        raise InvalidPermutation(f"{perm} is not a permutation of 0..{grid.K - 1}")
    new_grid = Grid(tuple(grid.points[i] for i in perm), tuple(grid.mults[i] for i in perm))
    return new_grid, HermiteData(tuple(data.coeffs[i] for i in perm))


def capacity_mean(points: Sequence[float], z: float) -> float:
    """Geometric mean ``(prod |z - z_k|) ** (1/K)``, computed in logs."""
    return math.exp(sum(math.log(abs(z - p)) for p in points) / len(points))
