"""Inverse power sums and the Newton-identity recurrence.

For a multiset of nonzero ``alpha`` the series

    1 / prod(1 - z/alpha_i) = 1 + I_1 z + I_2 z^2 + ...

has coefficients determined by the inverse power sums
``P_r = sum(alpha_i ** -r)`` through ``r I_r = sum_{s=1}^r P_s I_{r-s}``.
Every kernel here is generic over the scalar type, so the same code runs on
floats and on exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from operator import add
from typing import List, Sequence, Tuple

from .counting import OpCounter


def ordered_sum(values):
    """Left-to-right sum; no pairwise or compensated tricks."""
    if not values:
        return 0
    return reduce(add, values)


def exact_div(a, r: int):
    """``a / r`` that keeps an integer ``a`` (an empty sum) an integer when it divides."""
    if isinstance(a, int) and a % r == 0:
        return a // r
    return a / r


def n_invert_list(zprime: Sequence, ops: OpCounter | None = None) -> list:
    """Return ``-1/z`` for each difference ``z`` (nonzero by precondition)."""
    if ops is not None:
        ops.tally("invert", div=len(zprime))
    return [-1 / z for z in zprime]


def power_sums(zetas: Sequence, mults: Sequence[int], m: int,
               ops: OpCounter | None = None) -> list:
    """``P_r = sum_j mults[j] * zetas[j] ** r`` for ``r = 1..m``.

    The powers are built by the running product ``t_j <- zeta_j * t_j``
    starting from ``t_j = mults[j]``; each round is summed in index order.
    """
    if len(zetas) != len(mults):
        raise ValueError("zetas and mults differ in length")
    t = list(mults)
    P = []
    for _ in range(m):
        t = [zeta * tj for zeta, tj in zip(zetas, t)]
        P.append(ordered_sum(t))
    if ops is not None and t:
        ops.tally("power_sums", mul=m * len(t), add=m * (len(t) - 1))
    return P


def inverse_poly(P: Sequence, ops: OpCounter | None = None) -> list:
    """``I_0 = 1`` and ``I_r = (P_1 I_{r-1} + ... + P_r I_0) / r``."""
    I = [1]
    for r in range(1, len(P) + 1):
        acc = P[0] * I[r - 1]
        for s in range(2, r + 1):
            acc = acc + P[s - 1] * I[r - s]
        I.append(exact_div(acc, r))
    if ops is not None:
        m = len(P)
        ops.tally("inverse_poly", mul=m * (m + 1) // 2, add=m * (m - 1) // 2, div=m)
    return I


def _power_of_two_powers(s, m):
    # s**r by repeated multiplication; exact when s is a power of two
    out, acc = [], s
    for _ in range(m):
        out.append(acc)
        acc = acc * s
    return out


def inverse_poly_scaled(P: Sequence, s) -> list:
    """Recurrence on the scaled sums ``P_r / s**r``; returns ``I_r / s**r``.

    With ``s`` a power of two the scaling itself introduces no rounding.
    Diagnostic only: the weights use :func:`inverse_poly`.
    """
    if not s > 0:
        raise ValueError(f"scale must be positive, got {s!r}")
    scaled = [p / sr for p, sr in zip(P, _power_of_two_powers(s, len(P)))]
    return inverse_poly(scaled)


def _ceil_log2(a: Fraction) -> int:
    """Smallest integer L with 2**L >= a, for a > 0."""
    L = a.numerator.bit_length() - a.denominator.bit_length()
    while Fraction(2) ** L < a:
        L += 1
    while Fraction(2) ** (L - 1) >= a:
        L -= 1
    return L


def choose_scale(P: Sequence) -> float:
    """Smallest power of two ``s >= 1`` with ``|P_r| / s**r <= 1`` for all r."""
    e = 0
    for r, p in enumerate(P, start=1):
        if p == 0:
            continue
        L = _ceil_log2(abs(Fraction(p)))
        e = max(e, -(-L // r))
    return float(2 ** e)


def series_inverse_bruteforce(alphas: Sequence[Tuple[object, int]], m: int) -> List[Fraction]:
    """Exact ``I_0..I_m`` of ``prod (1 - z/alpha)**(-n)`` by series arithmetic.

    Independent of the Newton identities: the truncated product
    ``prod (1 - z/alpha)**n`` is expanded factor by factor and then ``1``
    is long-divided by it.
    """
    den = [Fraction(1)] + [Fraction(0)] * m
    for alpha, n in alphas:
        alpha = Fraction(alpha)
        if alpha == 0:
            raise ZeroDivisionError("alpha must be nonzero")
        c = -1 / alpha
        for _ in range(n):
            for i in range(m, 0, -1):
                den[i] += c * den[i - 1]
    out = []
    for r in range(m + 1):
        # 1 / den, den[0] == 1
        acc = Fraction(1 if r == 0 else 0)
        for i in range(1, r + 1):
            acc -= den[i] * out[r - i]
        out.append(acc)
    return out
