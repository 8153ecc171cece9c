"""Domain types: grids, Taylor data, weight tables and the intermediate cache.

All tables are ragged: row ``k`` has one entry per data item at grid point
``k``.  Grid indices are 0-based throughout the library.  Scalars may be
Python floats or :class:`fractions.Fraction` (the exact oracle runs the same
code paths on rationals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Sequence, Tuple

Row = Tuple[object, ...]


class BaryHermiteError(ValueError):
    """Base class for validation errors raised by this package."""


class EmptyGrid(BaryHermiteError):
    pass


class DuplicatePoint(BaryHermiteError):
    pass


class NonPositiveMultiplicity(BaryHermiteError):
    pass


class NonFinitePoint(BaryHermiteError):
    pass


class ShapeMismatch(BaryHermiteError):
    pass


class InvalidPermutation(BaryHermiteError):
    pass


class PreconditionViolated(BaryHermiteError):
    pass


class IndexOutOfRange(IndexError):
    pass


class NumericalFailure(ArithmeticError):
    """A floating-point quantity left the representable range."""


class UnderflowToZero(NumericalFailure):
    pass


class OverflowToInf(NumericalFailure):
    pass


class NonFiniteResult(NumericalFailure):
    pass


class ZeroDenominator(NumericalFailure):
    pass


def _canonical(z):
    if isinstance(z, Fraction):
        return z
    if isinstance(z, int):
        return float(z)
    z = float(z)
    # -0.0 and 0.0 denote the same grid point
    return 0.0 if z == 0.0 else z


@dataclass(frozen=True)
class Grid:
    """Distinct grid points ``points[k]`` carrying ``mults[k]`` data items each."""

    points: Tuple[object, ...]
    mults: Tuple[int, ...]
    offsets: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(accumulate(self.mults, initial=0)))

    @property
    def K(self) -> int:
        return len(self.points)

    @property
    def N(self) -> int:
        return self.offsets[-1]

    def index_of(self, z):
        """Return ``k`` with ``points[k] == z``, or None."""
        z = _canonical(z)
        for k, p in enumerate(self.points):
            if p == z:
                return k
        return None


def validate_grid(points: Sequence, mults: Sequence[int]) -> Grid:
    points = [_canonical(z) for z in points]
    mults = list(mults)
    if not points:
        raise EmptyGrid("grid has no points")
    if len(points) != len(mults):
        raise ShapeMismatch(f"{len(points)} points but {len(mults)} multiplicities")
    for k, z in enumerate(points):
        if isinstance(z, float) and not math.isfinite(z):
            raise NonFinitePoint(f"grid point {k} is {z}")
    for k, n in enumerate(mults):
        if int(n) != n or n < 1:
            raise NonPositiveMultiplicity(f"multiplicity {n!r} at grid point {k}")
    seen = {}
    for k, z in enumerate(points):
        if z in seen:
            raise DuplicatePoint(f"grid points {seen[z]} and {k} are both {z!r}")
        seen[z] = k
    return Grid(tuple(points), tuple(int(n) for n in mults))


def data_index(grid: Grid, k: int, r: int) -> int:
    """Flat position of data item ``(k, r)`` in 0..N-1."""
    if not 0 <= k < grid.K or not 0 <= r < grid.mults[k]:
        raise IndexOutOfRange(f"(k={k}, r={r}) outside grid with mults {grid.mults}")
    return grid.offsets[k] + r


def _check_rows(grid: Grid, rows, what: str):
    if len(rows) != grid.K:
        raise ShapeMismatch(f"{what} has {len(rows)} rows, grid has {grid.K} points")
    for k, (row, n) in enumerate(zip(rows, grid.mults)):
        if len(row) != n:
            raise ShapeMismatch(f"{what} row {k} has {len(row)} entries, expected {n}")


@dataclass(frozen=True)
class HermiteData:
    """Taylor coefficients ``coeffs[k][r] = f^(r)(z_k) / r!``."""

    coeffs: Tuple[Row, ...]

    @classmethod
    def from_rows(cls, rows, grid: Grid | None = None) -> "HermiteData":
        data = cls(tuple(tuple(row) for row in rows))
        if grid is not None:
            data.check(grid)
        return data

    def check(self, grid: Grid) -> None:
        _check_rows(grid, self.coeffs, "Taylor data")


@dataclass(frozen=True)
class WeightTable:
    """Barycentric weights ``weights[k][r]``, 0 <= r < n_k."""

    weights: Tuple[Row, ...]

    def __post_init__(self):
        for k, row in enumerate(self.weights):
            if not row or row[0] == 0:
                raise ShapeMismatch(f"weight row {k} must start with a nonzero w_(k,0)")

    @classmethod
    def from_rows(cls, rows, grid: Grid | None = None) -> "WeightTable":
        table = cls(tuple(tuple(row) for row in rows))
        if grid is not None:
            table.check(grid)
        return table

    def check(self, grid: Grid) -> None:
        _check_rows(grid, self.weights, "weight table")

    def __getitem__(self, k):
        return self.weights[k]

    def __len__(self):
        return len(self.weights)


@dataclass(frozen=True)
class CacheEntry:
    """Stored ``C_k``, power sums ``P_1..P_{n-1}`` and ``I_0..I_{n-1}`` for one point."""

    C: object
    P: Row
    I: Row

    def __post_init__(self):
        if not self.I or self.I[0] != 1:
            raise ShapeMismatch("inverse coefficients must start with I_0 = 1")
        if len(self.P) != len(self.I) - 1:
            raise ShapeMismatch(f"{len(self.P)} power sums for {len(self.I)} coefficients")

    @property
    def n(self) -> int:
        return len(self.I)


@dataclass(frozen=True)
class IntermediateCache:
    entries: Tuple[CacheEntry, ...]

    def check(self, grid: Grid) -> None:
        if len(self.entries) != grid.K:
            raise ShapeMismatch(f"cache has {len(self.entries)} rows, grid has {grid.K} points")
        for k, (e, n) in enumerate(zip(self.entries, grid.mults)):
            if e.n != n:
                raise ShapeMismatch(f"cache row {k} holds {e.n} coefficients, expected {n}")

    def __getitem__(self, k) -> CacheEntry:
        return self.entries[k]

    def __len__(self):
        return len(self.entries)
