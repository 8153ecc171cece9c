import math

import pytest
from hypothesis import given, strategies as st

from baryhermite.core import (CacheEntry, DuplicatePoint, EmptyGrid, HermiteData,
                              IndexOutOfRange, NonFinitePoint, NonPositiveMultiplicity,
                              ShapeMismatch, WeightTable, data_index, validate_grid)


def test_validate_pair_grid():
    g = validate_grid([-1, 1], [2, 2])
    assert (g.K, g.N) == (2, 4)


def test_single_point_grid():
    g = validate_grid([0], [5])
    assert (g.K, g.N) == (1, 5)


@pytest.mark.parametrize("points, mults, exc", [
    ([1, 1], [1, 1], DuplicatePoint),
    ([0.0, -0.0], [1, 1], DuplicatePoint),
    ([], [], EmptyGrid),
    ([0, 1], [1, 0], NonPositiveMultiplicity),
    ([0, math.nan], [1, 1], NonFinitePoint),
    ([0, math.inf], [1, 1], NonFinitePoint),
])
def test_validate_rejects(points, mults, exc):
    with pytest.raises(exc):
        validate_grid(points, mults)


def test_signed_zero_is_canonical():
    g = validate_grid([-0.0, 1.0], [1, 1])
    assert math.copysign(1.0, g.points[0]) == 1.0
    assert g.index_of(-0.0) == 0


def test_data_index_examples():
    g = validate_grid([-1, 1], [2, 2])
    assert data_index(g, 1, 0) == 2
    assert data_index(g, 0, 1) == 1
    with pytest.raises(IndexOutOfRange):
        data_index(g, 1, 2)


mults_lists = st.lists(st.integers(1, 6), min_size=1, max_size=8)


@given(mults_lists)
def test_data_index_is_bijection(mults):
    g = validate_grid(list(range(len(mults))), mults)
    flat = [data_index(g, k, r) for k in range(g.K) for r in range(g.mults[k])]
    assert sorted(flat) == list(range(g.N))


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=8, unique=True), st.data())
def test_validate_is_idempotent(points, data):
    if len({0.0 if p == 0 else p for p in points}) != len(points):
        return
    mults = data.draw(st.lists(st.integers(1, 4), min_size=len(points), max_size=len(points)))
    g = validate_grid(points, mults)
    assert validate_grid(g.points, g.mults) == g


def test_table_shapes_checked(pair_grid):
    with pytest.raises(ShapeMismatch):
        HermiteData.from_rows([[1.0], [1.0, 2.0]], pair_grid)
    with pytest.raises(ShapeMismatch):
        WeightTable.from_rows([[0.0, 1.0], [1.0, 1.0]])
    with pytest.raises(ShapeMismatch):
        CacheEntry(1.0, (), (2.0,))
