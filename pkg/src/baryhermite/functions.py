"""Test functions with Taylor-coefficient generators ``f^(r)(z) / r!``."""

from __future__ import annotations

import math
from typing import Sequence


def runge(z: float) -> float:
    return 1.0 / (1.0 + z * z)


def runge_taylor(z: float, r: int) -> float:
    """Taylor coefficient of ``1 / (1 + z^2)`` via the polar form of ``z - i``.

    With ``z - i = R e^{i theta}`` the coefficient is
    ``(-1)^(r-1) R^-(r+1) sin((r+1) theta)``; no factorials or large
    powers are formed, so it is stable for all ``r`` on ``[-1, 1]``.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    R = math.hypot(z, 1.0)
    theta = math.atan2(-1.0, z)
    sign = -1.0 if r % 2 == 0 else 1.0
    return sign * R ** -(r + 1) * math.sin((r + 1) * theta)


def hat(z: float) -> float:
    return 1.0 - abs(z)


def hat_taylor(z: float, r: int) -> float:
    """Taylor coefficients of ``1 - |z|`` with the convention ``f'(0) = 0``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return 1.0 - abs(z)
    if r == 1:
        return -1.0 if z > 0 else (1.0 if z < 0 else 0.0)
    return 0.0


def poly_taylor(coeffs: Sequence, z, r: int):
    """``p^(r)(z) / r!`` for ``p(x) = sum coeffs[i] x**i``.

    Uses ``r + 1`` synthetic divisions by ``(x - z)``; exact on rationals.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    b = list(coeffs)
    out = 0
    for _ in range(r + 1):
        if not b:
            return 0
        # divide b by (x - z): remainder is b(z), quotient replaces b
        acc = 0
        q = []
        for c in reversed(b):
            acc = acc * z + c
            q.append(acc)
        out = q.pop()
        b = q[::-1]
    return out
