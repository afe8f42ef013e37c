"""Exact arithmetic: rationals, binomials, harmonic-type weights and the constant ring.

Rationals are :class:`fractions.Fraction` throughout.  :class:`ExactConst` is a
finite linear combination of ``pi**a * sqrt(d)`` with rational coefficients,
``a`` in ``-1..4`` and ``d`` in ``{1, 2, 3}``; it is the value type of every
specialized identity in the package.
"""

from __future__ import annotations

import math
import re
import threading
from fractions import Fraction
from typing import Iterable, Mapping, Union

import mpmath
from mpmath import libmp

Rational = Union[int, Fraction]

PI_POWERS = range(-1, 5)
RADICANDS = (1, 2, 3)


class BasisOverflowError(ArithmeticError):
    """A product left the ``pi**a * sqrt(d)`` basis (``a`` in -1..4, ``d`` in {1,2,3})."""


# ---------------------------------------------------------------------------
# binomials and weights
# ---------------------------------------------------------------------------

def central_binom(k: int) -> int:
    """(2k)! / (k!)**2."""
    if k < 0:
        raise ValueError("central_binom needs k >= 0")
    return math.comb(2 * k, k)


def gen_binom_half(n: int) -> "ExactConst":
    """Binomial coefficient ``C(n, n/2)``, generalized through the gamma function.

    Even ``n`` gives the integer ``C(n, n/2)``.  Odd ``n`` gives
    ``Gamma(n+1)/Gamma(n/2+1)**2 = 4**n / (n * C(n-1, (n-1)/2)) / pi``.
    """
    if n < 0:
        raise ValueError("gen_binom_half needs n >= 0")
    if n % 2 == 0:
        return ExactConst.rational(math.comb(n, n // 2))
    coeff = Fraction(4**n, n * math.comb(n - 1, (n - 1) // 2))
    return ExactConst({(-1, 1): coeff})


class _PrefixSums:
    """Thread-safe growing table of exact prefix sums ``sum(term(j) for j < k)``."""

    def __init__(self, term, start: int):
        self._term = term
        self._start = start
        self._sums = [Fraction(0)]
        self._lock = threading.Lock()

    def __call__(self, k: int) -> Fraction:
        sums = self._sums
        if k < len(sums):
            return sums[k]
        with self._lock:
            while len(sums) <= k:
                j = len(sums) - 1 + self._start
                sums.append(sums[-1] + self._term(j))
            return sums[k]


_odd_sums = _PrefixSums(lambda j: Fraction(1, (2 * j + 1) ** 2), start=0)
_even_sums = _PrefixSums(lambda j: Fraction(1, (2 * j) ** 2), start=1)


def odd_square_partial(k: int) -> Fraction:
    """sum_{j=0}^{k-1} 1/(2j+1)**2, the weight of the arcsin-cubed expansion."""
    if k < 0:
        raise ValueError("odd_square_partial needs k >= 0")
    return _odd_sums(k)


def even_square_partial(k: int) -> Fraction:
    """sum_{j=1}^{k-1} 1/(2j)**2, the weight of the arcsin-fourth expansion."""
    if k < 1:
        raise ValueError("even_square_partial is defined for k >= 1")
    return _even_sums(k - 1)


def inverse_square_partial(a: int, b: int) -> Fraction:
    """sum_{j=a}^{b} 1/j**2 (empty when b < a)."""
    return sum((Fraction(1, j * j) for j in range(max(a, 1), b + 1)), Fraction(0))


def pochhammer(a: Rational, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1); (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def binom_ratio_bounds(k: int, digits: int = 50) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Outward-rounded bounds ``L <= C(2k,k)/4**k <= U`` for ``k >= 1``.

    ``U = 1/sqrt(pi k)`` and ``L = (7/8) U``.  Directed rounding keeps the
    lower end rounded down and the upper end rounded up.
    """
    if k < 1:
        raise ValueError("binom_ratio_bounds needs k >= 1")
    prec = int(digits * 3.3219280948873626) + 8
    k_mpf = libmp.from_int(k)
    # 1/sqrt(pi k) rounded up: every intermediate rounded towards a smaller denominator
    den = libmp.mpf_sqrt(libmp.mpf_mul(libmp.mpf_pi(prec, "d"), k_mpf, prec, "d"), prec, "d")
    hi = libmp.mpf_div(libmp.fone, den, prec, "u")
    den = libmp.mpf_sqrt(libmp.mpf_mul(libmp.mpf_pi(prec, "u"), k_mpf, prec, "u"), prec, "u")
    lo = libmp.mpf_div(libmp.from_rational(7, 8, prec, "d"), den, prec, "d")
    # wrapping at the ambient precision would round to nearest and undo the direction
    with mpmath.workprec(prec):
        return mpmath.mpf(lo), mpmath.mpf(hi)


# ---------------------------------------------------------------------------
# the constant ring
# ---------------------------------------------------------------------------

Key = tuple  # (pi power, radicand)


def _mul_keys(k1: Key, k2: Key) -> tuple[Key, int]:
    a = k1[0] + k2[0]
    d1, d2 = k1[1], k2[1]
    if d1 == 1:
        d, scale = d2, 1
    elif d2 == 1:
        d, scale = d1, 1
    elif d1 == d2:
        d, scale = 1, d1
    else:
        raise BasisOverflowError(f"sqrt({d1})*sqrt({d2}) is outside the constant basis")
    if a not in PI_POWERS:
        raise BasisOverflowError(f"pi^{a} is outside the constant basis")
    return (a, d), scale


class ExactConst:
    """Exact element ``sum c * pi**a * sqrt(d)`` with rational ``c``.

    Instances are immutable.  Zero coefficients are never stored, so equality
    of values is equality of the term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Rational] | Iterable[tuple[Key, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for key, c in items:
            a, d = key
            if a not in PI_POWERS or d not in RADICANDS:
                raise BasisOverflowError(f"term pi^{a}*sqrt({d}) is outside the constant basis")
            acc[(a, d)] = acc.get((a, d), Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in sorted(acc.items()) if v != 0}
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q: Rational) -> "ExactConst":
        return cls({(0, 1): q})

    @classmethod
    def pi_power(cls, a: int, coeff: Rational = 1) -> "ExactConst":
        return cls({(a, 1): coeff})

    @classmethod
    def sqrt(cls, d: int, coeff: Rational = 1) -> "ExactConst":
        return cls({(0, d): coeff})

    @classmethod
    def coerce(cls, value) -> "ExactConst":
        if isinstance(value, ExactConst):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        return NotImplemented

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(k == (0, 1) for k in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get((0, 1), Fraction(0))

    def coeff(self, a: int, d: int = 1) -> Fraction:
        return self._terms.get((a, d), Fraction(0))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = ExactConst.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = list(self._terms.items()) + list(other._terms.items())
        return ExactConst(merged)

    __radd__ = __add__

    def __neg__(self):
        return ExactConst({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = ExactConst.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = ExactConst.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactConst({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, ExactConst):
            return NotImplemented
        out: list[tuple[Key, Fraction]] = []
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key, scale = _mul_keys(k1, k2)
                out.append((key, c1 * c2 * scale))
        return ExactConst(out)

    __rmul__ = __mul__

    def inverse(self) -> "ExactConst":
        """Reciprocal of a single-term constant."""
        if len(self._terms) != 1:
            raise ValueError("only single-term constants are invertible in the basis")
        ((a, d), c), = self._terms.items()
        if -a not in PI_POWERS:
            raise BasisOverflowError(f"pi^{-a} is outside the constant basis")
        return ExactConst({(-a, d): 1 / (c * d)})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, ExactConst):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        other = ExactConst.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ExactConst.rational(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = ExactConst.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # numerics -----------------------------------------------------------

    def to_mpf(self, pi=None) -> mpmath.mpf:
        """Numeric value at the current mpmath precision (``pi`` may be supplied)."""
        pi = mpmath.mp.pi if pi is None else mpmath.mpf(pi)
        total = mpmath.mpf(0)
        for (a, d), c in self._terms.items():
            term = mpmath.mpf(c.numerator) / c.denominator * pi**a
            if d != 1:
                term *= mpmath.sqrt(d)
            total += term
        return total

    # text ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text, e.g. ``20/3*pi - 12*sqrt(3)``.

        Terms are ordered by descending pi power, then ascending radicand.
        """
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda k: (-k[0], k[1]))
        parts: list[str] = []
        for i, key in enumerate(keys):
            c = self._terms[key]
            factors = []
            a, d = key
            if a == 1:
                factors.append("pi")
            elif a != 0:
                factors.append(f"pi^{a}")
            if d != 1:
                factors.append(f"sqrt({d})")
            mag = abs(c)
            coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if mag != 1 or not factors:
                factors.insert(0, coeff)
            body = "*".join(factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    __str__ = render

    def __repr__(self):
        return f"ExactConst({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "ExactConst":
        """Inverse of :meth:`render` (whitespace between terms is optional)."""
        s = text.strip()
        if not s:
            raise ValueError("empty constant")
        pos = 0
        out: list[tuple[Key, Fraction]] = []
        first = True
        while pos < len(s):
            m = _SIGN.match(s, pos)
            sign = m.group(1)
            pos = m.end()
            if not sign and not first:
                raise ValueError(f"expected '+' or '-' at offset {pos} in {text!r}")
            first = False
            m = _TERM.match(s, pos)
            if not m:
                raise ValueError(f"cannot parse term at offset {pos} in {text!r}")
            pos = m.end()
            c, a, d = Fraction(1), 0, 1
            for factor in m.group(0).split("*"):
                factor = factor.strip()
                if factor.startswith("pi"):
                    a += int(factor[3:]) if factor.startswith("pi^") else 1
                elif factor.startswith("sqrt("):
                    if d != 1:
                        raise ValueError(f"two radicals in one term of {text!r}")
                    d = int(factor[5:-1])
                else:
                    c *= Fraction(factor)
            out.append(((a, d), -c if sign == "-" else c))
        return cls(out)


_FACTOR = r"(?:\d+(?:/\d+)?|pi(?:\^-?\d+)?|sqrt\(\d+\))"
_TERM = re.compile(rf"{_FACTOR}(?:\s*\*\s*{_FACTOR})*")
_SIGN = re.compile(r"\s*([+-]?)\s*")

PI = ExactConst.pi_power(1)
