"""Experiment pipelines behind the CLI and ``scripts/``.

Protocol for every interpolation run: Chebyshev points on [-1, 1] scaled by
2 (capacity 1), data rescaled to match, Leja ordering unless disabled, and
errors sampled on a uniform grid that always contains both endpoints.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np

from .core import Grid, HermiteData, validate_grid
from .counting import OpCounter
from .evaluate import sample_interpolant
from .functions import hat, hat_taylor, runge, runge_taylor
from .grids import apply_permutation, chebyshev_points, leja_order, scale_problem
from .oracle import exact_weights, relative_errors
from .update import InterpolationState, add_data
from .weights import hermite_weights

TARGETS = {
    "runge": (runge, runge_taylor),
    "hat": (hat, hat_taylor),
}


@dataclass
class InterpConfig:
    K: int
    n: int
    function: str = "runge"
    form: int = 2
    samples: int = 4096
    sigma: float = 2.0
    leja: bool = True


@dataclass
class InterpResult:
    config: InterpConfig
    x: np.ndarray
    error: np.ndarray
    errors: List[Optional[str]]
    seconds: float

    @property
    def sup(self) -> float:
        return float(np.max(self.error))


def chebyshev_problem(K: int, n: int, taylor: Callable[[float, int], float],
                      sigma: float = 2.0, leja: bool = True):
    """Scaled (and optionally Leja-ordered) Chebyshev grid with Taylor data."""
    pts = chebyshev_points(K)
    grid = validate_grid(pts, [n] * K)
    data = HermiteData(tuple(tuple(taylor(z, r) for r in range(n)) for z in pts))
    grid, data = scale_problem(grid, data, sigma)
    if leja:
        grid, data = apply_permutation(grid, data, leja_order(grid.points))
    return grid, data


def sample_points(samples: int) -> np.ndarray:
    """``samples`` interior points plus both endpoints of [-1, 1]."""
    return np.linspace(-1.0, 1.0, samples + 2)


def run_interpolation(cfg: InterpConfig, weights=None, problem=None) -> InterpResult:
    f, taylor = TARGETS[cfg.function]
    t0 = time.perf_counter()
    grid, data = problem or chebyshev_problem(cfg.K, cfg.n, taylor, cfg.sigma, cfg.leja)
    if weights is None:
        weights, _ = hermite_weights(grid)
    x = sample_points(cfg.samples)
    res = sample_interpolant(grid, weights, data, cfg.sigma * x, form=cfg.form)
    exact = np.array([f(xi) for xi in x])
    err = np.abs(res.values - exact)
    return InterpResult(cfg, x, err, res.errors, time.perf_counter() - t0)


def error_vs_K(function: str, n: int, Ks: Sequence[int], form: int = 2,
               samples: int = 4096) -> List[InterpResult]:
    return [run_interpolation(InterpConfig(K, n, function, form, samples)) for K in Ks]


@dataclass
class WeightErrorResult:
    K: int
    n: int
    errors: list = field(repr=False)
    max: float = 0.0
    seconds: float = 0.0


def weight_error(K: int, n: int, sigma: float = 2.0, leja: bool = False) -> WeightErrorResult:
    """Relative errors of the double-precision weights against exact rationals."""
    t0 = time.perf_counter()
    pts = [sigma * z for z in chebyshev_points(K)]
    grid = validate_grid(pts, [n] * K)
    if leja:
        grid = Grid(tuple(grid.points[i] for i in leja_order(grid.points)), grid.mults)
    computed, _ = hermite_weights(grid)
    errs = relative_errors(computed, exact_weights(grid))
    return WeightErrorResult(K, n, errs.values, errs.max, time.perf_counter() - t0)


@dataclass
class UpdateStep:
    zeta: float
    N: int
    max_deviation: float
    ops: int


def max_relative_deviation(a, b) -> float:
    worst = 0.0
    for ra, rb in zip(a.weights, b.weights):
        for x, y in zip(ra, rb):
            worst = max(worst, abs(x - y) / abs(y) if y != 0 else abs(x - y))
    return worst


def update_demo(grid: Grid, insertions: Sequence[float]) -> List[UpdateStep]:
    """Insert items one at a time, comparing against from-scratch weights."""
    state = InterpolationState.from_grid(grid)
    steps = []
    for zeta in insertions:
        ops = OpCounter()
        state = add_data(state, zeta, ops)
        scratch, _ = hermite_weights(state.grid)
        steps.append(UpdateStep(float(zeta), state.grid.N,
                                max_relative_deviation(state.weights, scratch), ops.total))
    return steps
