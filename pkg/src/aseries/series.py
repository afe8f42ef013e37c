"""High-precision evaluation of the series families, hypergeometric sums and limit scans.

The four series families (index ``n >= 0``) are

    p=1: sum_{k>=0} C(2k,k)/4^k * x^(2k)   / (2k+n+1)
    p=2: sum_{k>=1} 4^k/(C(2k,k) k) * x^(2k) / (2k+n)
    p=3: sum_{k>=0} C(2k,k) G(k)/4^k * x^(2k+1) / (2k+n+1)
    p=4: sum_{k>=1} 4^k H(k)/(C(2k,k) k) * x^(2k) / (2k+n)

with ``G``/``H`` the odd/even inverse-square partial sums.  For ``|x| < 1`` the
truncation error is bounded rigorously from ``7/8 <= C(2k,k) sqrt(pi k)/4^k <= 1``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath
from mpmath import mpf

from .closedform import TheoremRHS, corollary_exact
from .exactnum import ExactConst, central_binom, gen_binom_half

DEFAULT_DIGITS = 50
GUARD_DIGITS = 10
ESTIMATE_TERMS = 20000


class DivergenceError(ArithmeticError):
    """The hypergeometric series has zero radius of convergence."""


class PoleError(ArithmeticError):
    """A lower hypergeometric parameter is a nonpositive integer."""


class DomainError(ValueError):
    """Argument outside the region where the evaluation is defined."""


def default_digits() -> int:
    raw = os.environ.get("ASERIES_DIGITS")
    if not raw:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ASERIES_DIGITS must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class PrecisionCtx:
    """Working precision in decimal digits; arithmetic runs with extra guard digits."""

    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.digits < 10:
            raise ValueError("precision must be at least 10 digits")

    @classmethod
    def from_env(cls) -> "PrecisionCtx":
        return cls(default_digits())

    @property
    def working_dps(self) -> int:
        return self.digits + GUARD_DIGITS

    def workdps(self, extra: int = 0):
        return mpmath.workdps(self.working_dps + extra)

    @property
    def eps(self) -> mpf:
        return mpf(10) ** (-self.digits)


@dataclass(frozen=True)
class EvalReport:
    value: mpf
    tail_bound: mpf
    terms_used: int
    digits: int
    certified: bool = True


def to_mpf(x) -> mpf:
    """Convert ints, Fractions, decimal strings and floats at the ambient precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, str) and "/" in x:
        return to_mpf(Fraction(x))
    return mpf(x)


# ---------------------------------------------------------------------------
# pi by binary splitting of pi = 3 sum C(2k,k) / (16^k (2k+1))
# ---------------------------------------------------------------------------

def _split(a: int, b: int) -> tuple[int, int, int]:
    # term ratio t_k / t_{k-1} = (2k-1)^2 / (8k(2k+1))
    if b - a == 1:
        p = (2 * a - 1) ** 2
        return p, 8 * a * (2 * a + 1), p
    m = (a + b) // 2
    p1, q1, t1 = _split(a, m)
    p2, q2, t2 = _split(m, b)
    return p1 * p2, q1 * q2, t1 * q2 + p1 * t2


@lru_cache(maxsize=32)
def compute_pi(digits: int) -> mpf:
    """pi to ``digits`` decimal digits (plus guard digits)."""
    terms = int(digits / math.log10(4)) + 10
    _, q, t = _split(1, terms)
    with mpmath.workdps(digits + GUARD_DIGITS):
        return +(3 * mpf(q + t) / q)


# ---------------------------------------------------------------------------
# the four series families
# ---------------------------------------------------------------------------

def _tail_bound(p: int, n: int, K: int, x: mpf) -> mpf:
    """Bound on sum_{k>=K} |term_k| for |x| < 1, K >= 1."""
    r = x * x
    if r == 0:
        return mpf(0)
    geom = r**K / (1 - r)
    if p in (1, 3):
        b = geom / (mpmath.sqrt(mpmath.pi * K) * (2 * K + n + 1))
        if p == 3:
            b *= mpmath.pi**2 / 8 * abs(x)
    else:
        b = mpf(8) / 7 * mpmath.sqrt(mpmath.pi / K) * geom / (2 * K + n)
        if p == 4:
            b *= mpmath.pi**2 / 24
    # a relative nudge upward covers rounding in the bound itself
    return b * (1 + mpf(10) ** (-mpmath.mp.dps + 5))


def _choose_terms(p: int, n: int, x: mpf, eps: mpf) -> int:
    if x == 0:
        return 1
    hi = 1
    while _tail_bound(p, n, hi, x) >= eps:
        hi *= 2
    lo = max(1, hi // 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if _tail_bound(p, n, mid, x) < eps:
            hi = mid
        else:
            lo = mid + 1
    return hi


def _partial_sum(p: int, n: int, x: mpf, K: int) -> tuple[mpf, mpf]:
    """Sum of terms k < K and the arcsin-weight (G or H) reached at index K."""
    r = x * x
    terms = []
    if p in (1, 3):
        c = mpf(1)  # C(2k,k)/4^k
        weight = mpf(0)  # G(k)
        xp = mpf(1) if p == 1 else x
        for k in range(K):
            if k:
                c = c * (2 * k - 1) / (2 * k)
                weight += mpf(1) / (2 * k - 1) ** 2
                xp *= r
            coeff = c if p == 1 else c * weight
            terms.append(coeff * xp / (2 * k + n + 1))
        return mpmath.fsum(terms), weight + mpf(1) / (2 * K - 1) ** 2
    b = mpf(1)  # 4^k/C(2k,k)
    weight = mpf(0)  # H(k)
    xp = mpf(1)
    for k in range(1, K):
        b = b * (2 * k) / (2 * k - 1)
        if k > 1:
            weight += mpf(1) / (2 * k - 2) ** 2
        xp *= r
        coeff = b / k if p == 2 else b * weight / k
        terms.append(coeff * xp / (2 * k + n))
    return mpmath.fsum(terms), weight + (mpf(1) / (2 * K - 2) ** 2 if K > 1 else 0)


def _check_family(p: int, n: int) -> None:
    if p not in (1, 2, 3, 4):
        raise ValueError("arcsin power must be in 1..4")
    if n < 0:
        raise ValueError("n must be nonnegative")


def lhs_series(p: int, n: int, x, ctx: PrecisionCtx | None = None, estimate_terms: int = ESTIMATE_TERMS) -> EvalReport:
    """Sum the p-family series at index ``n``.

    ``|x| < 1`` gives a certified result with ``tail_bound < 10**-digits``.
    ``|x| = 1`` switches to an uncertified estimate: a fixed number of terms
    plus the midpoint of a two-sided bracket on the remainder.
    """
    ctx = ctx or PrecisionCtx.from_env()
    _check_family(p, n)
    with ctx.workdps():
        x = to_mpf(x)
        if abs(x) > 1:
            raise DomainError("series families are defined for |x| <= 1")
        if abs(x) == 1:
            return _lhs_estimate(p, n, x, ctx, estimate_terms)
        K = _choose_terms(p, n, x, ctx.eps)
        value, _ = _partial_sum(p, n, x, K)
        return EvalReport(+value, _tail_bound(p, n, K, x), K, ctx.digits, True)


def _lhs_estimate(p: int, n: int, x: mpf, ctx: PrecisionCtx, K: int) -> EvalReport:
    value, weight = _partial_sum(p, n, x, K)
    c = n + 1 if p in (1, 3) else n
    # sum_{k>=K} k^(-1/2)/(2k+c) lies between these two numbers
    lo_sum = 1 / (mpmath.sqrt(K) * (1 + mpf(c) / (2 * K)))
    hi_sum = 1 / (mpmath.sqrt(K) * (2 * K + c)) + 1 / mpmath.sqrt(K)
    sp = mpmath.sqrt(mpmath.pi)
    # for k >= K: (1 - 1/(8K)) / sqrt(pi k) < C(2k,k)/4^k < 1/sqrt(pi k)
    eta = 1 - mpf(1) / (8 * K)
    lo_mult, hi_mult = {
        1: (eta / sp, 1 / sp),
        2: (sp, sp / eta),
        3: (eta * weight / sp, mpmath.pi**2 / 8 / sp),
        4: (sp * weight, sp / eta * mpmath.pi**2 / 24),
    }[p]
    lo, hi = lo_mult * lo_sum, hi_mult * hi_sum
    sign = mpmath.sign(x) if p == 3 else 1
    mid = (lo + hi) / 2
    return EvalReport(+(value + sign * mid), (hi - lo) / 2, K, ctx.digits, False)


def rhs_numeric(rhs: TheoremRHS, x, ctx: PrecisionCtx | None = None) -> mpf:
    """Evaluate a theorem right-hand side, adding guard digits against cancellation.

    For small ``x`` the closed form cancels roughly ``n log10(2/|x|)`` digits
    before the ``x**-n`` prefactor restores the scale.
    """
    ctx = ctx or PrecisionCtx.from_env()
    with ctx.workdps():
        xv = to_mpf(x)
    if abs(xv) > 1:
        raise DomainError("closed forms are evaluated on [-1, 1]")
    if rhs.x_power < 0 and xv == 0:
        raise ZeroDivisionError("right-hand side has a negative power of x at x = 0")
    extra = 0
    if rhs.x_power < 0:
        extra = int(abs(rhs.x_power) * math.log10(2 / abs(float(xv)))) + 5
    with ctx.workdps(extra):
        value = rhs.evaluate(to_mpf(x))
    with ctx.workdps():
        return +value


# ---------------------------------------------------------------------------
# generalized hypergeometric series
# ---------------------------------------------------------------------------

def _as_mpf_param(a) -> mpf:
    return to_mpf(Fraction(a)) if isinstance(a, (int, Fraction, str)) else mpf(a)


def _is_nonpositive_int(a) -> bool:
    return a <= 0 and a == int(a)


def pfq_report(upper: Sequence, lower: Sequence, z, ctx: PrecisionCtx | None = None, max_terms: int = 10**6) -> EvalReport:
    """Sum ``pFq(upper; lower; z)`` with a certified geometric remainder bound.

    After index ``k`` the ratio of consecutive terms is bounded by
    ``|z| * prod max(1, (k+a)/(k+b))`` over paired parameters (the ``k!``
    supplies a lower parameter 1); once that bound is below one the remainder
    is at most ``|t_k| R/(1-R)``.
    """
    ctx = ctx or PrecisionCtx.from_env()
    with ctx.workdps():
        up = [_as_mpf_param(a) for a in upper]
        lo = [_as_mpf_param(b) for b in lower]
        z = to_mpf(z)
        if any(_is_nonpositive_int(b) for b in lo):
            raise PoleError("lower parameter is a nonpositive integer")
        terminating = any(_is_nonpositive_int(a) for a in up)
        if len(up) > len(lo) + 1 and not terminating and z != 0:
            raise DivergenceError("pFq with p > q + 1 diverges for z != 0")
        if len(up) == len(lo) + 1 and abs(z) >= 1 and not terminating:
            raise DomainError("pFq with p = q + 1 needs |z| < 1")
        dens = lo + [mpf(1)]
        pairs = list(zip(up, dens))
        extra_dens = dens[len(up):]
        shift = max([0] + [int(mpmath.ceil(-v)) + 1 for v in up + dens])
        eps = ctx.eps
        terms = []
        t = mpf(1)
        k = 0
        tail = mpf(0)
        while True:
            terms.append(t)
            if t == 0:
                break
            if k >= shift:
                R = abs(z)
                for a, b in pairs:
                    R *= max(mpf(1), (k + a) / (k + b))
                for b in extra_dens:
                    R /= k + b
                if R < 1:
                    tail = abs(t) * R / (1 - R)
                    if tail < eps * max(1, abs(terms[0])):
                        break
            if k >= max_terms:
                raise ArithmeticError(f"pFq did not converge within {max_terms} terms")
            num = z
            for a in up:
                num *= a + k
            den = mpf(1)
            for b in dens:
                den *= b + k
            t = t * num / den
            k += 1
        return EvalReport(+mpmath.fsum(terms), tail, len(terms), ctx.digits, True)


def pFq(upper: Sequence, lower: Sequence, z, ctx: PrecisionCtx | None = None) -> mpf:
    return pfq_report(upper, lower, z, ctx).value


_HALF = Fraction(1, 2)


def hyp88_sides(n: int, x, ctx: PrecisionCtx | None = None) -> tuple[mpf, mpf]:
    """2F1(1/2, n+1/2; n+3/2; x^2) and sqrt(1-x^2) 2F1(1, n+1; n+3/2; x^2)."""
    ctx = ctx or PrecisionCtx.from_env()
    if n < 0:
        raise ValueError("n must be nonnegative")
    with ctx.workdps():
        x = to_mpf(x)
        if abs(x) >= 1:
            raise DomainError("need |x| < 1")
        z = x * x
        lhs = pFq([_HALF, n + _HALF], [n + Fraction(3, 2)], z, ctx)
        rhs = mpmath.sqrt(1 - z) * pFq([1, n + 1], [n + Fraction(3, 2)], z, ctx)
        return lhs, rhs


def check_hyp_88(n: int, x, ctx: PrecisionCtx | None = None) -> mpf:
    lhs, rhs = hyp88_sides(n, x, ctx)
    return abs(lhs - rhs)


def hyp811_sides(n: int, x, ctx: PrecisionCtx | None = None) -> tuple[mpf, mpf]:
    """Both sides of the product identity for 2F1(1/2,1;3/2;x/(x-1)) 2F1(1,n;n+1/2;x).

    ``x`` is the already-substituted variable; ``x/(x-1)`` must stay inside the
    unit disk, so only ``0 <= x < 1/2`` is accepted.
    """
    ctx = ctx or PrecisionCtx.from_env()
    if n < 1:
        raise ValueError("n must be at least 1")
    with ctx.workdps():
        x = to_mpf(x)
        if not (0 <= x < mpf(1) / 2):
            raise DomainError("x/(x-1) leaves the unit disk unless 0 <= x < 1/2")
        lhs = (2 * n - 1) * pFq([1, 1, n], [Fraction(3, 2), n + 1], x, ctx) + pFq(
            [1, n, n], [n + _HALF, n + 1], x, ctx
        )
        rhs = 2 * n * pFq([_HALF, 1], [Fraction(3, 2)], x / (x - 1), ctx) * pFq([1, n], [n + _HALF], x, ctx)
        return lhs, rhs


def check_hyp_811(n: int, x, ctx: PrecisionCtx | None = None) -> mpf:
    lhs, rhs = hyp811_sides(n, x, ctx)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# tails of the generating series, as leading term times a hypergeometric sum
# ---------------------------------------------------------------------------

def _odd_tail_series(m: int, x: mpf, ctx) -> EvalReport:
    """sum_{j>=m} (2x)^(2j+1) / (C(2j,j)(2j+1))."""
    lead = (2 * x) ** (2 * m + 1) / (central_binom(m) * (2 * m + 1))
    rep = pfq_report([1, m + 1], [m + Fraction(3, 2)], x * x, ctx)
    return EvalReport(lead * rep.value, abs(lead) * rep.tail_bound, rep.terms_used, ctx.digits)


def _half_tail_series(m: int, x: mpf, ctx) -> EvalReport:
    """sum_{j>=m} C(2j,j) (x/2)^(2j)."""
    lead = central_binom(m) * (x / 2) ** (2 * m)
    rep = pfq_report([m + _HALF, 1], [m + 1], x * x, ctx)
    return EvalReport(lead * rep.value, abs(lead) * rep.tail_bound, rep.terms_used, ctx.digits)


def _half_odd_tail_series(m: int, x: mpf, ctx) -> EvalReport:
    """sum_{j>=m} C(2j,j) (x/2)^(2j+1) / (2j+1)."""
    lead = central_binom(m) * (x / 2) ** (2 * m + 1) / (2 * m + 1)
    rep = pfq_report([m + _HALF, m + _HALF, 1], [m + 1, m + Fraction(3, 2)], x * x, ctx)
    return EvalReport(lead * rep.value, abs(lead) * rep.tail_bound, rep.terms_used, ctx.digits)


def _square_tail_series(m: int, x: mpf, ctx) -> EvalReport:
    """sum_{j>=m} (2x)^(2j) / (C(2j,j) j^2), m >= 1."""
    lead = (2 * x) ** (2 * m) / (central_binom(m) * m * m)
    rep = pfq_report([m, m, 1], [m + _HALF, m + 1], x * x, ctx)
    return EvalReport(lead * rep.value, abs(lead) * rep.tail_bound, rep.terms_used, ctx.digits)


TAIL_IDENTITIES = ("3.12", "3.13", "4.20", "4.21")


def tail_identity_sides(which: str, n: int, x, ctx: PrecisionCtx | None = None) -> tuple[mpf, mpf]:
    """Both sides of an identity between a shifted series and tails of generating series.

    ``"3.12"``: sum_k C(2k,k) x^(2k+2n+1)/(4^k (2k+2n+1))
                = C(2n,n) sqrt(1-x^2)/2^(2n+1) * sum_{j>=n} (2x)^(2j+1)/(C(2j,j)(2j+1))
    ``"3.13"``: 2n C(2n,n) sum_k C(2k,k)/(2k+2n) (x/2)^(2k+2n)
                = sqrt(1-x^2) sum_{j>=n} C(2j,j) (x/2)^(2j)                     (n >= 1)
    ``"4.20"``: sum_{k>=1} (2x)^(2k+2n)/(C(2k,k) k (2k+2n))
                = C(2n,n) [sqrt(1-x^2) asin(x) sum_{j>=n} (2x)^(2j+1)/(C(2j,j)(2j+1))
                           - 1/2 sum_{j>n} (2x)^(2j)/(C(2j,j) j^2)]
    ``"4.21"``: (2n+1) C(2n,n)/2^(2n+1) sum_{k>=1} 4^k/(C(2k,k) k) x^(2k+2n+1)/(2k+2n+1)
                = sqrt(1-x^2) asin(x) sum_{j>n} C(2j,j)(x/2)^(2j) - 2 sum_{j>n} C(2j,j)/(2j+1) (x/2)^(2j+1)
    """
    ctx = ctx or PrecisionCtx.from_env()
    if which not in TAIL_IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; expected one of {TAIL_IDENTITIES}")
    if n < 0 or (which == "3.13" and n < 1):
        raise ValueError("n out of range for this identity")
    with ctx.workdps():
        x = to_mpf(x)
        if abs(x) >= 1:
            raise DomainError("need |x| < 1")
        s = mpmath.sqrt(1 - x * x)
        a = mpmath.asin(x)
        cn = central_binom(n)
        if which == "3.12":
            lhs = x ** (2 * n + 1) * lhs_series(1, 2 * n, x, ctx).value
            rhs = cn * s / mpf(2) ** (2 * n + 1) * _odd_tail_series(n, x, ctx).value
        elif which == "3.13":
            lhs = 2 * n * cn * (x / 2) ** (2 * n) * lhs_series(1, 2 * n - 1, x, ctx).value
            rhs = s * _half_tail_series(n, x, ctx).value
        elif which == "4.20":
            lhs = (2 * x) ** (2 * n) * lhs_series(2, 2 * n, x, ctx).value
            rhs = cn * (s * a * _odd_tail_series(n, x, ctx).value - _square_tail_series(n + 1, x, ctx).value / 2)
        else:
            pre = mpf((2 * n + 1) * cn) / mpf(2) ** (2 * n + 1)
            lhs = pre * x ** (2 * n + 1) * lhs_series(2, 2 * n + 1, x, ctx).value
            rhs = s * a * _half_tail_series(n + 1, x, ctx).value - 2 * _half_odd_tail_series(n + 1, x, ctx).value
        return lhs, rhs


def partial_tail_identity_check(which: str, n: int, x, ctx: PrecisionCtx | None = None) -> mpf:
    lhs, rhs = tail_identity_sides(which, n, x, ctx)
    return abs(lhs - rhs)


def transform_sides(n: int, x, ctx: PrecisionCtx | None = None) -> tuple[mpf, mpf]:
    """Series shift with f = arcsin against f(x) x^n - n int_0^x t^(n-1) f(t) dt.

    The shifted series is sum_j C(2j,j)/4^j x^(2j+1+n)/(2j+1+n); the integral
    comes from the quadrature oracle, so agreement is limited to ~1e-12.
    """
    from .quadrature import integrate_moment

    ctx = ctx or PrecisionCtx.from_env()
    if n < 0:
        raise ValueError("n must be nonnegative")
    with ctx.workdps():
        x = to_mpf(x)
        if not (0 < x < 1):
            raise DomainError("need 0 < x < 1")
        lhs = x ** (n + 1) * lhs_series(1, n, x, ctx).value
        rhs = mpmath.asin(x) * x**n
        if n:
            rhs -= n * mpf(integrate_moment(1, n - 1, float(x)).value)
        return lhs, rhs


def general_transform_check(n: int, x, ctx: PrecisionCtx | None = None) -> mpf:
    lhs, rhs = transform_sides(n, x, ctx)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# limit scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LimitRow:
    n: int
    scaled: mpf
    error: mpf
    exact_scaled: ExactConst | None = None
    exact_error: ExactConst | None = None


def _pi_scaling(p: int, n: int) -> ExactConst:
    factor = {1: 1, 2: 1, 3: 8, 4: 24}[p]
    return gen_binom_half(n).inverse() * (factor * 2 ** (n + 1))


def scaled_pi_sum(p: int, n: int) -> ExactConst:
    """The x = 1 sum of the p-family, rescaled so that it tends to pi**p."""
    return _pi_scaling(p, n) * corollary_exact(p, n, "1")


def limit_scan_pi(p: int, n_max: int, ctx: PrecisionCtx | None = None, ns: Iterable[int] | None = None) -> list[LimitRow]:
    """Exact rescaled x = 1 sums and their distance to pi**p for n = 0..n_max."""
    ctx = ctx or PrecisionCtx.from_env()
    if p not in (1, 2, 3, 4):
        raise ValueError("arcsin power must be in 1..4")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    target = ExactConst.pi_power(p)
    pi = compute_pi(ctx.working_dps)
    rows = []
    with ctx.workdps():
        for n in ns if ns is not None else range(n_max + 1):
            scaled = scaled_pi_sum(p, n)
            err = scaled - target
            rows.append(LimitRow(n, scaled.to_mpf(pi), abs(err.to_mpf(pi)), scaled, err))
    return rows


def doubled_square_tail(n: int) -> ExactConst:
    """2 sum_{j>n/2} 4^j/(C(2j,j) j^2) for even n, exact via the full sum pi^2/2."""
    if n % 2:
        raise ValueError("defined for even n")
    head = sum((Fraction(4**j, central_binom(j) * j * j) for j in range(1, n // 2 + 1)), Fraction(0))
    return ExactConst.pi_power(2) - 2 * head


INNER_LIMITS = ("7.8", "7.9")


def limit_scan_inner(which: str, x, n_max: int, ctx: PrecisionCtx | None = None, ns: Iterable[int] | None = None) -> list[LimitRow]:
    """(2n+1)-rescaled shifted series and their distance to the limiting function.

    ``"7.8"``: (2n+1) sum_k C(2k,k)/(2k+2n+1) (x/2)^(2k)        -> 1/sqrt(1-x^2)
    ``"7.9"``: (2n+1) sum_{k>=1} (2x)^(2k-1)/(C(2k,k) k (2k+2n)) -> asin(x)/sqrt(1-x^2)
    """
    ctx = ctx or PrecisionCtx.from_env()
    if which not in INNER_LIMITS:
        raise ValueError(f"unknown limit {which!r}; expected one of {INNER_LIMITS}")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    with ctx.workdps():
        x = to_mpf(x)
        if abs(x) > mpf("0.95"):
            raise DomainError("inner limits are scanned on |x| <= 0.95")
        s = mpmath.sqrt(1 - x * x)
        limit = 1 / s if which == "7.8" else mpmath.asin(x) / s
        for n in ns if ns is not None else range(1, n_max + 1):
            if which == "7.8":
                scaled = (2 * n + 1) * lhs_series(1, 2 * n, x, ctx).value
            elif x == 0:
                scaled = mpf(0)
            else:
                scaled = (2 * n + 1) / (2 * x) * lhs_series(2, 2 * n, x, ctx).value
            rows.append(LimitRow(n, scaled, abs(scaled - limit)))
    return rows
