"""Univariate polynomials over Q and the first-order operator F -> x F + (x^2 - 1) F'."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class RatPoly:
    """Immutable polynomial with :class:`~fractions.Fraction` coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "RatPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def const(cls, c: Scalar) -> "RatPoly":
        return cls([c])

    @classmethod
    def from_terms(cls, terms: dict[int, Scalar]) -> "RatPoly":
        if not terms:
            return cls()
        cs = [Fraction(0)] * (max(terms) + 1)
        for i, c in terms.items():
            cs[i] += Fraction(c)
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def deriv(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def integral(self) -> "RatPoly":
        """Antiderivative vanishing at 0."""
        return RatPoly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        """Horner evaluation; works for Fraction, mpf, float or ExactConst arguments."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def eval_mp(self, x):
        """Horner evaluation in mpmath at the ambient precision."""
        import mpmath

        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
        return acc

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def __repr__(self):
        if not self.coeffs:
            return "RatPoly(0)"
        parts = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "RatPoly(" + " + ".join(parts) + ")"


def _coerce(value) -> RatPoly:
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RatPoly.const(value)
    return NotImplemented


X = RatPoly.monomial(1)
ONE = RatPoly.const(1)
_X2_MINUS_1 = RatPoly([-1, 0, 1])


def apply_operator(p: RatPoly) -> RatPoly:
    """x p(x) + (x^2 - 1) p'(x)."""
    return X * p + _X2_MINUS_1 * p.deriv()


def invert_operator(p: RatPoly) -> tuple[RatPoly, Fraction]:
    """Polynomial preimage of ``p`` modulo the constant direction.

    Returns ``(q, lam)`` with ``apply_operator(q) + lam == p`` and
    ``deg q = deg p - 1``.  ``lam`` is the weight of the non-polynomial
    solution ``log(x + sqrt(x^2-1))/sqrt(x^2-1)``, whose image is 1; the
    kernel ``c/sqrt(x^2-1)`` is not used.
    """
    # image of x^i is (i+1) x^(i+1) - i x^(i-1), so the system is triangular from the top
    d = p.degree
    if d < 0:
        return RatPoly(), Fraction(0)
    q = [Fraction(0)] * (d + 2)
    for m in range(d, 0, -1):
        q[m - 1] = (p[m] + (m + 1) * q[m + 1]) / m
    lam = p[0] + q[1]
    return RatPoly(q[:d]), lam


def check_log_particular(x: float, step: float) -> float:
    """Residual of the operator applied to log(x + sqrt(x^2-1))/sqrt(x^2-1), minus 1.

    The derivative is a central difference, so the residual is O(step^2).
    """
    if x <= 1 or x - step <= 1:
        raise ValueError("check_log_particular needs x - step > 1")
    if step <= 0:
        raise ValueError("step must be positive")

    def f(t: float) -> float:
        r = math.sqrt(t * t - 1)
        return math.log(t + r) / r

    df = (f(x + step) - f(x - step)) / (2 * step)
    return abs(x * f(x) + (x * x - 1) * df - 1)


def poly_sum(polys: Sequence[RatPoly]) -> RatPoly:
    out = RatPoly()
    for p in polys:
        out = out + p
    return out
