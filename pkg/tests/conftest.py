from fractions import Fraction

import pytest
from hypothesis import strategies as st

from baryhermite.core import HermiteData, validate_grid
from baryhermite.grids import chebyshev_points

ACCEPTANCE = {}


def record(criterion, passed, detail=""):
    """Store a pass/fail line for the acceptance summary."""
    ACCEPTANCE[criterion] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda c: (int(c.split()[0]), c)):
        passed, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {key}: {detail}")


@pytest.fixture
def pair_grid():
    return validate_grid([-1.0, 1.0], [2, 2])


@pytest.fixture
def cubic_data():
    # f(z) = z^3: Taylor rows (f, f') at -1 and 1
    return HermiteData(((-1.0, 3.0), (1.0, 3.0)))


def scaled_chebyshev(K, n, sigma=2.0):
    return validate_grid([sigma * z for z in chebyshev_points(K)], [n] * K)


@st.composite
def rational_grids(draw, max_K=5, max_n=4):
    K = draw(st.integers(1, max_K))
    pts = draw(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=16),
                        min_size=K, max_size=K, unique=True))
    mults = draw(st.lists(st.integers(1, max_n), min_size=K, max_size=K))
    return validate_grid(pts, mults)


@st.composite
def rational_multisets(draw, max_size=6):
    alphas = draw(st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=9).filter(lambda a: a != 0),
        min_size=1, max_size=max_size, unique=True))
    mults = draw(st.lists(st.integers(1, 3), min_size=len(alphas), max_size=len(alphas)))
    return list(zip(alphas, mults))


def exact_power_sums(alphas, m):
    return [sum((Fraction(n) / Fraction(a) ** r for a, n in alphas), Fraction(0))
            for r in range(1, m + 1)]
