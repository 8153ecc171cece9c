"""Barycentric Hermite interpolation with O(N) weight updates."""

from .core import (BaryHermiteError, DuplicatePoint, EmptyGrid, Grid, HermiteData,
                   IntermediateCache, CacheEntry, NonFiniteResult, NonPositiveMultiplicity,
                   OverflowToInf, UnderflowToZero, WeightTable, ZeroDenominator,
                   data_index, validate_grid)
from .counting import OpCounter
from .evaluate import eval_first_form, eval_second_form, sample_interpolant
from .grids import apply_permutation, chebyshev_points, leja_order, scale_problem
from .update import InterpolationState, add_data
from .weights import count_ops, hermite_weights

__all__ = [
    "BaryHermiteError", "CacheEntry", "DuplicatePoint", "EmptyGrid", "Grid", "HermiteData",
    "IntermediateCache", "InterpolationState", "NonFiniteResult", "NonPositiveMultiplicity",
    "OpCounter", "OverflowToInf", "UnderflowToZero", "WeightTable", "ZeroDenominator",
    "add_data", "apply_permutation", "chebyshev_points", "count_ops", "data_index",
    "eval_first_form", "eval_second_form", "hermite_weights", "leja_order",
    "sample_interpolant", "scale_problem", "validate_grid",
]
