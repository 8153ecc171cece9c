from fractions import Fraction as F

import pytest

from baryhermite.core import HermiteData, PreconditionViolated, ShapeMismatch, WeightTable, validate_grid
from baryhermite.oracle import (UNIT_ROUNDOFF, ZeroLeadingDenominatorCoefficient,
                                exact_interpolant_eval, exact_second_form_series,
                                exact_weights, gamma_bound, relative_errors)
from baryhermite.weights import hermite_weights

from conftest import scaled_chebyshev

CUBIC = HermiteData(((-1, 3), (1, 3)))


def test_exact_weights_examples():
    assert exact_weights(validate_grid([-1, 1], [2, 2])).weights == (
        (F(1, 4), F(1, 4)), (F(1, 4), F(-1, 4)))
    assert exact_weights(validate_grid([0, 1], [1, 1])).weights == ((-1,), (1,))


def test_exact_interpolant_examples(pair_grid):
    assert exact_interpolant_eval(pair_grid, CUBIC, F(1, 2)) == F(1, 8)
    assert exact_interpolant_eval(pair_grid, HermiteData(((1, 0), (1, 0))), 7) == 1
    assert exact_interpolant_eval(pair_grid, CUBIC, 3) == 27


def test_exact_second_form_series_examples(pair_grid):
    w = exact_weights(pair_grid)
    assert exact_second_form_series(pair_grid, w, CUBIC, 1, 1) == [1, 3]
    tripled = WeightTable(tuple(tuple(3 * x for x in row) for row in w.weights))
    const = HermiteData(((1, 0), (1, 0)))
    assert exact_second_form_series(pair_grid, tripled, const, 0, 0) == [1]
    bumped = WeightTable((w.weights[0][:1] + (w.weights[0][1] + F(1, 10),), w.weights[1]))
    assert exact_second_form_series(pair_grid, bumped, CUBIC, 0, 1) == [-1, 3]


def test_second_form_series_needs_nonzero_leading_weights(pair_grid):
    w = WeightTable(((F(1, 4), F(1, 4)), (F(1, 4), F(-1, 4))))
    bad = WeightTable.__new__(WeightTable)
    object.__setattr__(bad, "weights", ((0, 1), w.weights[1]))
    with pytest.raises(ZeroLeadingDenominatorCoefficient):
        exact_second_form_series(pair_grid, bad, CUBIC, 0, 1)


def test_second_form_series_reproduces_data_unperturbed():
    g = validate_grid([F(-3, 2), F(1, 3), 2], [3, 1, 2])
    data = HermiteData(((1, -2, F(1, 2)), (5,), (0, 7)))
    w = exact_weights(g)
    for k, n in enumerate(g.mults):
        assert exact_second_form_series(g, w, data, k, n - 1) == list(data.coeffs[k])


def test_relative_errors_examples(pair_grid):
    w = exact_weights(pair_grid)
    assert relative_errors(w, w).max == 0
    bumped = WeightTable(tuple(tuple(x * (1 + UNIT_ROUNDOFF) for x in row) for row in w.weights))
    assert all(v == 2.0 ** -53 for row in relative_errors(bumped, w).values for v in row)
    computed, _ = hermite_weights(pair_grid)
    assert relative_errors(computed, w).max <= 4 * 2.0 ** -53
    with pytest.raises(ShapeMismatch):
        relative_errors(WeightTable(((1.0,),)), w)


def test_relative_errors_flags_zero_exact_entries():
    exact = WeightTable(((F(1), F(0)),))
    err = relative_errors(WeightTable(((1.0, 1e-20),)), exact)
    assert err.absolute == {(0, 1)} and err.values[0][1] == 1e-20 and err.max == 0


def test_oracle_vs_float_is_finite_and_small():
    g = scaled_chebyshev(6, 3)
    err = relative_errors(hermite_weights(g)[0], exact_weights(g))
    assert 0 <= err.max < 1e-12


def test_gamma_bound():
    assert gamma_bound(1).value == pytest.approx(1.11e-16, rel=1e-2)
    assert gamma_bound(0).value == 0
    with pytest.raises(PreconditionViolated):
        gamma_bound(2 ** 53)
