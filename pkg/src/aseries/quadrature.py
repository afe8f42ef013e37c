"""Double-precision quadrature oracle for int_0^x t^nu asin(t)^p dt.

With t = sin(theta) the integrand becomes theta^p sin(theta)^nu cos(theta) on
[0, asin x], which is smooth even at x = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels

TOLERANCE = 1e-13


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int


def _check(p: int, nu: int) -> None:
    if p not in (1, 2, 3, 4):
        raise ValueError("arcsin power must be in 1..4")
    if nu < 0:
        raise ValueError("nu must be nonnegative")


def integrate_angle(p: int, nu: int, theta0: float, theta1: float) -> QuadResult:
    """int theta^p sin^nu cos over [theta0, theta1] in the angle variable."""
    _check(p, nu)
    value, err, evals = _kernels.adaptive(p, nu, float(theta0), float(theta1), TOLERANCE)
    return QuadResult(value, err, evals)


def integrate_moment(p: int, nu: int, x: float) -> QuadResult:
    """int_0^x t^nu asin(t)^p dt for 0 < x <= 1."""
    x = float(x)
    if not (0 < x <= 1):
        raise ValueError("integrate_moment needs 0 < x <= 1")
    return integrate_angle(p, nu, 0.0, math.asin(x))


def integrate_between(p: int, nu: int, x1: float, x2: float) -> QuadResult:
    """int_{x1}^{x2} t^nu asin(t)^p dt for 0 <= x1 <= x2 <= 1."""
    if not (0 <= x1 <= x2 <= 1):
        raise ValueError("need 0 <= x1 <= x2 <= 1")
    return integrate_angle(p, nu, math.asin(x1), math.asin(x2))
