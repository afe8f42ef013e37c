"""Closed forms built from powers of arcsin.

Every expression here lives in the normal form

    sum_{j, e} P_{j,e}(x) * arcsin(x)**j * sqrt(1 - x**2)**e,   j <= 4, e in {0, 1},

with rational polynomial coefficients (:class:`ClosedFormExpr`).  Moment
integrals ``int_0^x t**nu arcsin(t)**p dt`` are assembled from a :class:`Kit`
of polynomials; series right-hand sides are :class:`TheoremRHS` objects, i.e.
an expression times ``scale * x**x_power``.  Substituting one of the four
special points ``1, 1/2, sqrt(2)/2, sqrt(3)/2`` gives exact constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import mpmath

from .exactnum import (
    ExactConst,
    central_binom,
    gen_binom_half,
    inverse_square_partial,
)
from .polyops import ONE, X, RatPoly, apply_operator, poly_sum

Key = tuple  # (arcsin power, sqrt flag)


class KitConsistencyError(RuntimeError):
    """An explicit kit formula disagrees with the vanishing-at-zero condition."""


# ---------------------------------------------------------------------------
# normal-form expressions
# ---------------------------------------------------------------------------

_ONE_MINUS_X2 = RatPoly([1, 0, -1])


class ClosedFormExpr:
    """Map ``(j, e) -> P_{j,e}`` representing ``sum P * asin(x)**j * sqrt(1-x^2)**e``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, RatPoly] | None = None):
        acc: dict[Key, RatPoly] = {}
        for (j, e), p in (terms or {}).items():
            if not (0 <= j <= 4 and e in (0, 1)):
                raise ValueError(f"term ({j}, {e}) is outside the normal form")
            acc[(j, e)] = acc.get((j, e), RatPoly()) + p
        self.terms: dict[Key, RatPoly] = {k: v for k, v in sorted(acc.items()) if not v.is_zero()}

    def __add__(self, other: "ClosedFormExpr") -> "ClosedFormExpr":
        merged = dict(self.terms)
        for k, p in other.terms.items():
            merged[k] = merged.get(k, RatPoly()) + p
        return ClosedFormExpr(merged)

    def __sub__(self, other: "ClosedFormExpr") -> "ClosedFormExpr":
        return self + other.scaled(-1)

    def scaled(self, c) -> "ClosedFormExpr":
        """Multiply by a rational or by a polynomial in x."""
        return ClosedFormExpr({k: p * c for k, p in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ClosedFormExpr):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"ClosedFormExpr({self.terms!r})"

    def render(self) -> str:
        """Readable form, e.g. ``(2)*asin(x) - (2*x)*sqrt(1-x^2)``."""
        if not self.terms:
            return "0"
        parts = []
        for (j, e), p in sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            factors = [f"({render_poly(p)})"]
            if j:
                factors.append("asin(x)" if j == 1 else f"asin(x)^{j}")
            if e:
                factors.append("sqrt(1-x^2)")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def sqrt_times_derivative(self) -> "ClosedFormExpr":
        """``sqrt(1-x^2) * d/dx`` of the expression, again in normal form."""
        out: dict[Key, RatPoly] = {}

        def put(key, p):
            out[key] = out.get(key, RatPoly()) + p

        for (j, e), p in self.terms.items():
            dp = p.deriv()
            if e == 0:
                put((j, 1), dp)
                if j:
                    put((j - 1, 0), p * j)
            else:
                put((j, 0), dp * _ONE_MINUS_X2 - X * p)
                if j:
                    put((j - 1, 1), p * j)
        return ClosedFormExpr(out)

    def evaluate(self, x) -> mpmath.mpf:
        """Numeric value at ``|x| <= 1`` in the ambient mpmath precision."""
        x = mpmath.mpf(x)
        if abs(x) > 1:
            raise ValueError("closed forms are evaluated on [-1, 1]")
        a = mpmath.asin(x)
        s = mpmath.sqrt(1 - x * x)
        return self._combine(x, a, s)

    def _combine(self, x, a, s) -> mpmath.mpf:
        total = mpmath.mpf(0)
        for (j, e), p in self.terms.items():
            term = p.eval_mp(x) * a**j
            if e:
                term *= s
            total += term
        return total

    def specialize(self, x: ExactConst, a: ExactConst, s: ExactConst) -> ExactConst:
        """Exact value given exact x, arcsin(x) and sqrt(1-x^2)."""
        total = ExactConst()
        powers = [ExactConst.rational(1)]
        for _ in range(4):
            powers.append(powers[-1] * a)
        for (j, e), p in self.terms.items():
            term = p(x) * powers[j]
            if e:
                term = term * s
            total = total + term
        return total


def render_poly(p: RatPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}" if mono else f"{mag}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class TheoremRHS:
    """``scale * x**x_power * expr(x)``: a series right-hand side with its x-power prefactor."""

    expr: ClosedFormExpr
    scale: Fraction
    x_power: int

    def render(self) -> str:
        return f"{self.scale} * x^{self.x_power} * [{self.expr.render()}]"

    def evaluate(self, x) -> mpmath.mpf:
        x = mpmath.mpf(x)
        if self.x_power < 0 and x == 0:
            raise ZeroDivisionError("right-hand side has a negative power of x at x = 0")
        return mpmath.mpf(self.scale.numerator) / self.scale.denominator * x**self.x_power * self.expr.evaluate(x)


# ---------------------------------------------------------------------------
# kits: int_0^x t^nu asin(t)^p dt
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Kit:
    """Polynomials (f, g, h, u, w) of the moment integral of ``t**nu asin(t)**p``.

    ``(nu+1) * I = f A^p + g S A^(p-1) + h A^(p-2) + u S A^(p-3) + w A^(p-4)``
    with ``A = asin x`` and ``S = sqrt(1-x^2)``.  The slot whose arcsin power
    would be -1 holds the plain integration constant; slots beyond it are zero.
    Scalar entries are degree-0 polynomials.
    """

    p: int
    nu: int
    f: RatPoly
    g: RatPoly
    h: RatPoly = field(default_factory=RatPoly)
    u: RatPoly = field(default_factory=RatPoly)
    w: RatPoly = field(default_factory=RatPoly)


def _c(k: int) -> int:
    return central_binom(k)


def _p1_f(nu: int) -> RatPoly:
    l = nu // 2
    if nu % 2 == 0:
        return RatPoly.monomial(2 * l + 1)
    return RatPoly.monomial(2 * l + 2) - Fraction(_c(l + 1), 4 ** (l + 1))


def _p1_g(nu: int) -> RatPoly:
    l = nu // 2
    if nu % 2 == 0:
        pre = Fraction(4**l, (2 * l + 1) * _c(l))
        return poly_sum([RatPoly.monomial(2 * j, Fraction(_c(j), 4**j)) for j in range(l + 1)]) * pre
    pre = Fraction(_c(l + 1), 2 * 4 ** (l + 1))
    return poly_sum(
        [RatPoly.monomial(2 * j + 1, Fraction(2 ** (2 * j + 1), (2 * j + 1) * _c(j))) for j in range(l + 1)]
    ) * pre


def _p2_h(nu: int) -> RatPoly:
    l = nu // 2
    if nu % 2 == 0:
        pre = Fraction(-(4 ** (l + 1)), (2 * l + 1) * _c(l))
        return poly_sum(
            [RatPoly.monomial(2 * j + 1, Fraction(_c(j), 2 ** (2 * j + 1) * (2 * j + 1))) for j in range(l + 1)]
        ) * pre
    pre = Fraction(-_c(l + 1), 2 * 4 ** (l + 1))
    return poly_sum(
        [RatPoly.monomial(2 * j, Fraction(4**j, _c(j) * j * j)) for j in range(1, l + 2)]
    ) * pre


def _p3_h(nu: int) -> RatPoly:
    l = nu // 2
    h = _p2_h(nu) * 3
    if nu % 2:
        h = h + Fraction(3 * _c(l + 1), 2 * 4 ** (l + 1)) * inverse_square_partial(1, l + 1)
    return h


def _odd_tail(r: int, l: int) -> Fraction:
    # sum_{j=r}^{l} 1/(2j+1)^2
    return sum((Fraction(1, (2 * j + 1) ** 2) for j in range(r, l + 1)), Fraction(0))


def _p3_u(nu: int) -> RatPoly:
    l = nu // 2
    if nu % 2 == 0:
        pre = Fraction(-6 * 4**l, (2 * l + 1) * _c(l))
        return poly_sum(
            [RatPoly.monomial(2 * r, _odd_tail(r, l) * Fraction(_c(r), 4**r)) for r in range(l + 1)]
        ) * pre
    pre = Fraction(-3 * _c(l + 1), 4 ** (l + 2))
    return poly_sum(
        [
            RatPoly.monomial(
                2 * r + 1,
                inverse_square_partial(r + 1, l + 1) * Fraction(2 ** (2 * r + 1), (2 * r + 1) * _c(r)),
            )
            for r in range(l + 1)
        ]
    ) * pre


def _p3_w(nu: int) -> RatPoly:
    l = nu // 2
    if nu % 2:
        return RatPoly()
    return RatPoly.const(Fraction(6 * 4**l, (2 * l + 1) * _c(l)) * _odd_tail(0, l))


def _p4_w(nu: int) -> RatPoly:
    l = nu // 2
    if nu % 2 == 0:
        pre = Fraction(3 * 4 ** (l + 2), (2 * l + 1) * _c(l))
        return poly_sum(
            [
                RatPoly.monomial(2 * r + 1, _odd_tail(r, l) * Fraction(_c(r), 2 ** (2 * r + 1) * (2 * r + 1)))
                for r in range(l + 1)
            ]
        ) * pre
    pre = Fraction(6 * _c(l + 1), 4 ** (l + 2))
    return poly_sum(
        [
            RatPoly.monomial(2 * r, inverse_square_partial(r, l + 1) * Fraction(4**r, _c(r) * r * r))
            for r in range(1, l + 2)
        ]
    ) * pre


def build_kit(p: int, nu: int) -> Kit:
    """Explicit kit for ``int_0^x t**nu asin(t)**p dt``, ``p`` in 1..4."""
    if p not in (1, 2, 3, 4):
        raise ValueError("arcsin power must be in 1..4")
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    f, g1 = _p1_f(nu), _p1_g(nu)
    if p == 1:
        kit = Kit(1, nu, f, g1, RatPoly.const(-g1[0]) if nu % 2 == 0 else RatPoly())
        _check_constant(kit.h, -g1(0), "h", p, nu)
        return kit
    if p == 2:
        kit = Kit(2, nu, f, g1 * 2, _p2_h(nu))
        _check_constant(RatPoly.const(kit.h(0)), Fraction(0), "h(0)", p, nu)
        return kit
    h3, u3 = _p3_h(nu), _p3_u(nu)
    if p == 3:
        kit = Kit(3, nu, f, g1 * 3, h3, u3, _p3_w(nu))
        _check_constant(kit.w, -u3(0), "w", p, nu)
        return kit
    kit = Kit(4, nu, f, g1 * 4, h3 * 2, u3 * 4, _p4_w(nu))
    _check_constant(RatPoly.const(kit.w(0)), Fraction(0), "w(0)", p, nu)
    return kit


def _check_constant(stored: RatPoly, required: Fraction, name: str, p: int, nu: int) -> None:
    # the integral vanishes at x = 0; the explicit constants must agree with that
    if stored != RatPoly.const(required):
        raise KitConsistencyError(f"kit(p={p}, nu={nu}): {name} = {stored} but I(0) = 0 forces {required}")


def kit_to_integral_expr(kit: Kit) -> ClosedFormExpr:
    """``int_0^x t**nu asin(t)**p dt`` as a normal-form expression."""
    p = kit.p
    slots = [(kit.f, 0), (kit.g, 1), (kit.h, 0), (kit.u, 1), (kit.w, 0)]
    terms: dict[Key, RatPoly] = {}
    for drop, (poly, e) in enumerate(slots):
        j = p - drop
        if j < 0:
            # the slot one past the last arcsin power holds the integration constant
            if j < -1 and not poly.is_zero():
                raise ValueError(f"kit component {drop} must vanish for p={p}")
            j, e = 0, 0
        terms[(j, e)] = terms.get((j, e), RatPoly()) + poly
    return ClosedFormExpr(terms).scaled(Fraction(1, kit.nu + 1))


def kit_relations(kit: Kit) -> dict[str, bool]:
    """The coefficient identities that make the kit an antiderivative of ``x**nu asin**p``."""
    p, nu = kit.p, kit.nu
    rel = {
        "f' = (nu+1) x^nu": kit.f.deriv() == RatPoly.monomial(nu, nu + 1),
        "Dg = p f": apply_operator(kit.g) == kit.f * p,
        "h' = -(p-1) g": kit.h.deriv() == kit.g * -(p - 1),
    }
    if p == 1:
        rel["u = w = 0"] = kit.u.is_zero() and kit.w.is_zero()
    elif p == 2:
        rel["u = w = 0"] = kit.u.is_zero() and kit.w.is_zero()
    elif p == 3:
        rel["Du = h"] = apply_operator(kit.u) == kit.h
        rel["w' = 0"] = kit.w.deriv().is_zero()
    else:
        rel["Du = 2h"] = apply_operator(kit.u) == kit.h * 2
        rel["w' = -u"] = kit.w.deriv() == -kit.u
    return rel


def verify_kit_derivative(p: int, nu: int) -> bool:
    """Exact check that the kit expression differentiates to ``x**nu asin(x)**p``.

    Both the full derivative (multiplied through by sqrt(1-x^2) to stay in
    normal form) and every per-component relation must hold.
    """
    kit = build_kit(p, nu)
    expr = kit_to_integral_expr(kit)
    target = ClosedFormExpr({(p, 1): RatPoly.monomial(nu)})
    if expr.sqrt_times_derivative() != target:
        return False
    return all(kit_relations(kit).values())


# ---------------------------------------------------------------------------
# series right-hand sides
# ---------------------------------------------------------------------------

def _odd_partial(m: int) -> RatPoly:
    """sum_{j=0}^{m-1} (2x)^(2j+1) / (C(2j,j) (2j+1))."""
    return poly_sum([RatPoly.monomial(2 * j + 1, Fraction(2 ** (2 * j + 1), _c(j) * (2 * j + 1))) for j in range(m)])


def _half_partial(m: int) -> RatPoly:
    """sum_{j=0}^{m} C(2j,j) (x/2)^(2j)."""
    return poly_sum([RatPoly.monomial(2 * j, Fraction(_c(j), 4**j)) for j in range(m + 1)])


def _half_odd_partial(m: int) -> RatPoly:
    """sum_{j=0}^{m} C(2j,j) (x/2)^(2j+1) / (2j+1)."""
    return poly_sum([RatPoly.monomial(2 * j + 1, Fraction(_c(j), 2 ** (2 * j + 1) * (2 * j + 1))) for j in range(m + 1)])


def _square_partial(m: int) -> RatPoly:
    """sum_{j=1}^{m} (2x)^(2j) / (C(2j,j) j^2)."""
    return poly_sum([RatPoly.monomial(2 * j, Fraction(4**j, _c(j) * j * j)) for j in range(1, m + 1)])


def _rhs_p1(n: int) -> TheoremRHS:
    if n % 2 == 0:
        expr = ClosedFormExpr({(1, 0): RatPoly.const(2), (0, 1): -_odd_partial(n // 2)})
        return TheoremRHS(expr, Fraction(math.comb(n, n // 2), 2 ** (n + 1)), -(n + 1))
    m = (n - 1) // 2
    expr = ClosedFormExpr({(0, 0): ONE, (0, 1): -_half_partial(m)})
    return TheoremRHS(expr, Fraction(2 ** (n + 1), (n + 1) * math.comb(n + 1, (n + 1) // 2)), -(n + 1))


def _rhs_p2(n: int) -> TheoremRHS:
    if n % 2 == 0:
        m = n // 2
        expr = ClosedFormExpr(
            {(2, 0): ONE, (1, 1): -_odd_partial(m), (0, 0): _square_partial(m) * Fraction(1, 2)}
        )
        return TheoremRHS(expr, Fraction(math.comb(n, m), 2**n), -n)
    m = (n - 1) // 2
    expr = ClosedFormExpr({(0, 0): _half_odd_partial(m) * 2, (1, 1): -_half_partial(m)})
    return TheoremRHS(expr, Fraction(2**n, n * math.comb(n - 1, m)), -n)


def _shifted_square_weighted(m: int) -> RatPoly:
    """sum_{j=1}^{m} ((2x)^(2j)/C(2j,j) - 1) / j^2."""
    return poly_sum(
        [RatPoly.monomial(2 * j, Fraction(4**j, _c(j) * j * j)) - Fraction(1, j * j) for j in range(1, m + 1)]
    )


def _nested_odd(m: int) -> RatPoly:
    """sum_{r=0}^{m-1} (sum_{j=r+1}^{m} 1/j^2) (2x)^(2r+1) / (C(2r,r)(2r+1))."""
    return poly_sum(
        [
            RatPoly.monomial(2 * r + 1, inverse_square_partial(r + 1, m) * Fraction(2 ** (2 * r + 1), _c(r) * (2 * r + 1)))
            for r in range(m)
        ]
    )


def _nested_half(m: int) -> RatPoly:
    """sum_{r=0}^{m} (sum_{j=r}^{m} 1/(2j+1)^2) C(2r,r) (x/2)^(2r)."""
    return poly_sum([RatPoly.monomial(2 * r, _odd_tail(r, m) * Fraction(_c(r), 4**r)) for r in range(m + 1)])


def _nested_half_odd(m: int) -> RatPoly:
    """sum_{r=0}^{m} (sum_{j=r}^{m} 1/(2j+1)^2) C(2r,r) (x/2)^(2r+1) / (2r+1)."""
    return poly_sum(
        [
            RatPoly.monomial(2 * r + 1, _odd_tail(r, m) * Fraction(_c(r), 2 ** (2 * r + 1) * (2 * r + 1)))
            for r in range(m + 1)
        ]
    )


def _nested_square(m: int) -> RatPoly:
    """sum_{r=1}^{m} (sum_{j=r}^{m} 1/j^2) (2x)^(2r) / (C(2r,r) r^2)."""
    return poly_sum(
        [RatPoly.monomial(2 * r, inverse_square_partial(r, m) * Fraction(4**r, _c(r) * r * r)) for r in range(1, m + 1)]
    )


def _rhs_p3(n: int) -> TheoremRHS:
    if n % 2 == 0:
        m = n // 2
        expr = ClosedFormExpr(
            {
                (3, 0): RatPoly.const(Fraction(2, 3)),
                (2, 1): -_odd_partial(m),
                (1, 0): _shifted_square_weighted(m),
                (0, 1): _nested_odd(m) * Fraction(1, 2),
            }
        )
        return TheoremRHS(expr, Fraction(math.comb(n, m), 4 * 2**n), -n)
    m = (n - 1) // 2
    expr = ClosedFormExpr(
        {
            (2, 1): _half_partial(m) * Fraction(-1, 2),
            (1, 0): _half_odd_partial(m) * 2,
            (0, 1): _nested_half(m),
            (0, 0): RatPoly.const(-_odd_tail(0, m)),
        }
    )
    return TheoremRHS(expr, Fraction(2**n, 2 * n * math.comb(n - 1, m)), -n)


def _rhs_p4(n: int) -> TheoremRHS:
    if n % 2 == 0:
        m = n // 2
        expr = ClosedFormExpr(
            {
                (4, 0): RatPoly.const(Fraction(1, 6)),
                (3, 1): _odd_partial(m) * Fraction(-1, 3),
                (2, 0): _shifted_square_weighted(m) * Fraction(1, 2),
                (1, 1): _nested_odd(m) * Fraction(1, 2),
                (0, 0): _nested_square(m) * Fraction(-1, 4),
            }
        )
        # overall 1/2 relative to the printed prefactor C(n,n/2)/(2x)^n; see kit cross-check in tests
        return TheoremRHS(expr, Fraction(math.comb(n, m), 2 * 2**n), -n)
    m = (n - 1) // 2
    expr = ClosedFormExpr(
        {
            (3, 1): _half_partial(m) * Fraction(-1, 6),
            (2, 0): _half_odd_partial(m),
            (1, 1): _nested_half(m),
            (0, 0): _nested_half_odd(m) * -2,
        }
    )
    return TheoremRHS(expr, Fraction(2**n, n * math.comb(n - 1, m)), -n)


_RHS_BUILDERS = {1: _rhs_p1, 2: _rhs_p2, 3: _rhs_p3, 4: _rhs_p4}


def rhs_theorem(p: int, n: int) -> TheoremRHS:
    """Closed form of the shifted series for the p-th arcsin power.

    The series (left-hand sides) are, for ``n >= 0``::

        p=1: sum_{k>=0} C(2k,k) (x/2)^(2k) / (2k+n+1)
        p=2: sum_{k>=1} (2x)^(2k) / (C(2k,k) k (2k+n))
        p=3: sum_{k>=0} C(2k,k) G(k) x^(2k+1) / (4^k (2k+1+n))
        p=4: sum_{k>=1} 4^k H(k) x^(2k) / (C(2k,k) k (2k+n))

    with ``G``/``H`` the odd/even inverse-square partial sums.
    """
    if p not in _RHS_BUILDERS:
        raise ValueError("arcsin power must be in 1..4")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _RHS_BUILDERS[p](n)


def rhs_from_kit(p: int, n: int) -> TheoremRHS:
    """The same right-hand side derived from a kit via the shift transform.

    ``sum c_k x^(m+n)/(m+n) = f(x) x^n - n int_0^x t^(n-1) f(t) dt``, divided
    by the family's normalization; an independent route to :func:`rhs_theorem`.
    """
    weight = {1: Fraction(1), 2: Fraction(1), 3: Fraction(1, 6), 4: Fraction(1, 12)}[p]
    x_shift = {1: -1, 2: 0, 3: 0, 4: 0}[p]
    base = ClosedFormExpr({(p, 0): RatPoly.monomial(n)})
    if n > 0:
        base = base - kit_to_integral_expr(build_kit(p, n - 1)).scaled(n)
    return TheoremRHS(base.scaled(weight), Fraction(1), -n + x_shift)


# ---------------------------------------------------------------------------
# exact specializations
# ---------------------------------------------------------------------------

_H = Fraction(1, 2)
SPECIAL_POINTS: dict[str, tuple[ExactConst, ExactConst, ExactConst]] = {
    # token: (x, arcsin x, sqrt(1 - x^2))
    "1": (ExactConst.rational(1), ExactConst.pi_power(1, _H), ExactConst()),
    "1/2": (ExactConst.rational(_H), ExactConst.pi_power(1, Fraction(1, 6)), ExactConst.sqrt(3, _H)),
    "sqrt2/2": (ExactConst.sqrt(2, _H), ExactConst.pi_power(1, Fraction(1, 4)), ExactConst.sqrt(2, _H)),
    "sqrt3/2": (ExactConst.sqrt(3, _H), ExactConst.pi_power(1, Fraction(1, 3)), ExactConst.rational(_H)),
}


def specialize_rhs(rhs: TheoremRHS, xcase: str) -> ExactConst:
    if xcase not in SPECIAL_POINTS:
        raise ValueError(f"unsupported exact point {xcase!r}; use one of {sorted(SPECIAL_POINTS)}")
    x, a, s = SPECIAL_POINTS[xcase]
    xp = x if rhs.x_power >= 0 else x.inverse()
    return rhs.expr.specialize(x, a, s) * xp ** abs(rhs.x_power) * rhs.scale


def corollary_exact(p: int, n: int, xcase: str) -> ExactConst:
    """Exact sum of the p-family series at one of the special points."""
    return specialize_rhs(rhs_theorem(p, n), xcase)


def _pi(a: int, c=1) -> ExactConst:
    return ExactConst.pi_power(a, c)


def corollary_formula(p: int, n: int) -> ExactConst:
    """Independent closed forms of the series at x = 1 (direct transcription).

    These do not go through :func:`rhs_theorem`; agreement between the two is
    one of the exact checks of the package.
    """
    if n % 2 == 0:
        m = n // 2
        cb = Fraction(math.comb(n, m))
        if p == 1:
            return _pi(1, cb / 2 ** (n + 1))
        if p == 2:
            head = sum((Fraction(4**j, _c(j) * j * j) for j in range(1, m + 1)), Fraction(0))
            return (_pi(2) + 2 * head) * (cb / 2 ** (n + 2))
        weighted = sum((Fraction(4**j, _c(j)) - 1) / (j * j) for j in range(1, m + 1))
        if p == 3:
            return (_pi(3, Fraction(1, 6)) + _pi(1, weighted)) * (cb / 2 ** (n + 3))
        nested = sum(inverse_square_partial(r, m) * Fraction(4**r, _c(r) * r * r) for r in range(1, m + 1))
        # one extra factor 1/2 relative to the printed pi^4 identity
        return (_pi(4, Fraction(1, 12)) + _pi(2, weighted) - 2 * nested) * (cb / 2 ** (n + 4))
    m = (n - 1) // 2
    pre = Fraction(2**n, n * math.comb(n - 1, m))
    arc_head = sum((Fraction(_c(j), (2 * j + 1) * 4**j) for j in range(m + 1)), Fraction(0))
    if p == 1:
        return ExactConst.rational(Fraction(2 ** (n - 1), n * math.comb(n - 1, m)))
    if p == 2:
        return ExactConst.rational(pre * arc_head)
    if p == 3:
        return (_pi(1, arc_head / 2) - _odd_tail(0, m)) * (pre / 2)
    total = ExactConst()
    for r in range(m + 1):
        total = total + (_pi(2, Fraction(1, 8)) - _odd_tail(r, m)) * Fraction(_c(r), (2 * r + 1) * 4**r)
    return total * pre


def unified_pi_formula(n: int) -> ExactConst:
    """C(n, n/2) pi / 2^(n+1) with the generalized binomial for odd n."""
    return gen_binom_half(n) * _pi(1, Fraction(1, 2 ** (n + 1)))


def corollary_45_sides(n: int) -> list[tuple[ExactConst, ExactConst]]:
    """Exact (lhs, rhs) pairs of the two x = 1 rearrangements for index ``n``.

    With the full sums ``sum_{j>=1} 4^j/(C(2j,j) j^2) = pi^2/2`` and
    ``sum_{j>=0} C(2j,j)/((2j+1) 4^j) = pi/2`` the infinite tails become
    finite heads, so both sides live in the constant ring:

        4^n/C(2n,n) * sum_k 4^k/(C(2k,k) k (k+n))            = pi^2 - sum_{j>n} 4^j/(C(2j,j) j^2)
        (2n+1) C(2n,n)/4^n * sum_k 4^k/(C(2k,k) k (2k+2n+1)) = pi - 2 sum_{j>n} C(2j,j)/((2j+1) 4^j)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cn = _c(n)
    # sum 4^k/(C k (k+n)) = 2 * (series of the p=2 family at index 2n)
    lhs_even = corollary_exact(2, 2 * n, "1") * Fraction(2 * 4**n, cn)
    square_head = sum((Fraction(4**j, _c(j) * j * j) for j in range(1, n + 1)), Fraction(0))
    rhs_even = _pi(2) - (_pi(2, _H) - square_head)

    lhs_odd = corollary_exact(2, 2 * n + 1, "1") * Fraction((2 * n + 1) * cn, 4**n)
    arc_head = sum((Fraction(_c(j), (2 * j + 1) * 4**j) for j in range(n + 1)), Fraction(0))
    rhs_odd = _pi(1) - (_pi(1, _H) - arc_head) * 2
    return [(lhs_even, rhs_even), (lhs_odd, rhs_odd)]


def corollary_45_consistency(n: int) -> bool:
    """True iff both x = 1 rearrangements hold exactly for index ``n``."""
    return all(lhs == rhs for lhs, rhs in corollary_45_sides(n))


# values at x = 1/2 for small even n, as tabulated for the p = 1 and p = 2 families
REFERENCE_X_HALF: dict[int, dict[int, str]] = {
    1: {
        0: "1/3*pi",
        2: "2/3*pi - sqrt(3)",
        4: "2*pi - 7/2*sqrt(3)",
        6: "20/3*pi - 12*sqrt(3)",
        8: "70/3*pi - 169/4*sqrt(3)",
        10: "84*pi - 1523/10*sqrt(3)",
    },
    2: {
        0: "1/36*pi^2",
        2: "1/18*pi^2 - 1/6*pi*sqrt(3) + 1/2",
        4: "1/6*pi^2 - 7/12*pi*sqrt(3) + 13/8",
        6: "5/9*pi^2 - 2*pi*sqrt(3) + 197/36",
    },
}
