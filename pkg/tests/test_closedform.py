from fractions import Fraction
import math

import mpmath
import pytest

from aseries.closedform import (
    SPECIAL_POINTS,
    ClosedFormExpr,
    KitConsistencyError,
    build_kit,
    corollary_45_consistency,
    corollary_45_sides,
    corollary_exact,
    corollary_formula,
    kit_relations,
    kit_to_integral_expr,
    rhs_from_kit,
    rhs_theorem,
    unified_pi_formula,
    verify_kit_derivative,
)
from aseries.exactnum import ExactConst
from aseries.polyops import ONE, X, RatPoly, invert_operator
from aseries.quadrature import integrate_moment
from aseries.series import PrecisionCtx, lhs_series

import oracles

F = Fraction
PI = ExactConst.pi_power(1)


def test_kit_p1_examples():
    k = build_kit(1, 0)
    assert (k.f, k.g, k.h) == (X, ONE, RatPoly.const(-1))
    k = build_kit(1, 1)
    assert k.f == RatPoly([F(-1, 2), 0, 1])
    assert k.g == X / 2
    assert k.h.is_zero()


def test_kit_p3_constant():
    assert build_kit(3, 0).w == RatPoly.const(6)


def test_kit_rejects_bad_power():
    with pytest.raises(ValueError):
        build_kit(5, 0)
    with pytest.raises(ValueError):
        build_kit(0, 0)


def test_integral_expr_shape():
    expr = kit_to_integral_expr(build_kit(1, 0))
    assert expr.terms == {(1, 0): X, (0, 1): ONE, (0, 0): RatPoly.const(-1)}


def test_integral_vanishes_at_zero():
    for p in range(1, 5):
        for nu in range(11):
            assert kit_to_integral_expr(build_kit(p, nu)).evaluate(0) == 0


def test_scaling_relations():
    for nu in range(41):
        g1 = build_kit(1, nu).g
        k3, k4 = build_kit(3, nu), build_kit(4, nu)
        assert build_kit(2, nu).g == g1 * 2
        assert k3.g == g1 * 3
        assert k4.g == g1 * 4
        assert k4.h == k3.h * 2
        assert k4.u == k3.u * 4
        for p in (2, 3, 4):
            assert build_kit(p, nu).f == build_kit(1, nu).f


def test_invert_operator_recovers_g():
    for nu in range(31):
        kit = build_kit(1, nu)
        f0 = kit.f(0)
        q, lam = invert_operator(kit.f - f0)
        assert q == kit.g and lam == -f0


def test_kit_parity_and_degree():
    for nu in range(20):
        for p in range(1, 5):
            kit = build_kit(p, nu)
            assert kit.f.degree == nu + 1
            assert kit.g.degree == nu
            if nu % 2 == 0:
                assert kit.f.is_odd() and kit.g.is_even()
            else:
                assert kit.f.is_even() and kit.g.is_odd()


@pytest.mark.parametrize("p,nu", [(2, 3), (3, 4), (4, 7)])
def test_verify_kit_derivative_examples(p, nu):
    assert verify_kit_derivative(p, nu)
    rel = kit_relations(build_kit(p, nu))
    assert all(rel.values())
    if p == 3:
        assert "h' = -(p-1) g" in rel
    if p == 4:
        assert "w' = -u" in rel


def test_broken_kit_is_detected():
    kit = build_kit(2, 2)
    from dataclasses import replace

    bad = replace(kit, g=kit.g + X)
    assert not all(kit_relations(bad).values())
    expr = kit_to_integral_expr(bad)
    target = ClosedFormExpr({(2, 1): RatPoly.monomial(2)})
    assert expr.sqrt_times_derivative() != target


def test_kit_consistency_error_is_a_runtime_error():
    assert issubclass(KitConsistencyError, RuntimeError)


def test_kit_value_at_one_against_quadrature():
    with mpmath.workdps(30):
        value = kit_to_integral_expr(build_kit(2, 1)).evaluate(1)
        kit = build_kit(2, 1)
        manual = (kit.f(1) * mpmath.pi**2 / 4 + kit.h(1)) / 2
        assert abs(value - manual) < 1e-25
    assert abs(float(value) - integrate_moment(2, 1, 1.0).value) < 1e-12


def test_rhs_small_index_shapes():
    with mpmath.workdps(30):
        x = mpmath.mpf("0.37")
        a, s = mpmath.asin(x), mpmath.sqrt(1 - x * x)
        assert abs(rhs_theorem(1, 0).evaluate(x) - a / x) < 1e-25
        assert abs(rhs_theorem(2, 0).evaluate(x) - a**2) < 1e-25
        assert abs(rhs_theorem(1, 1).evaluate(x) - (1 - s) / x**2) < 1e-25
        assert abs(rhs_theorem(3, 0).evaluate(x) - a**3 / 6) < 1e-25
        assert abs(rhs_theorem(4, 0).evaluate(x) - a**4 / 12) < 1e-25


def test_rhs_agrees_with_kit_route():
    with mpmath.workdps(40):
        for p in range(1, 5):
            for n in range(13):
                for x in ("0.3", "0.8", "-0.55"):
                    a = rhs_theorem(p, n).evaluate(mpmath.mpf(x))
                    b = rhs_from_kit(p, n).evaluate(mpmath.mpf(x))
                    assert abs(a - b) < mpmath.mpf(10) ** -30 * (1 + abs(a)), (p, n, x)


def test_rhs_even_fourth_power_against_series():
    # the even-index fourth-power closed form carries a factor 1/2 that is easy to lose
    ctx = PrecisionCtx(30)
    for n in (2, 4, 6):
        lhs = lhs_series(4, n, "0.6", ctx).value
        with mpmath.workdps(40):
            rhs = rhs_theorem(4, n).evaluate(mpmath.mpf("0.6"))
        assert abs(lhs - rhs) < 1e-25
        assert abs(lhs - 2 * rhs) > 1e-3


@pytest.mark.parametrize("n,text", sorted(oracles.X_HALF_P1.items()))
def test_x_half_p1(n, text):
    assert corollary_exact(1, n, "1/2") == ExactConst.parse(text)


@pytest.mark.parametrize("n,text", sorted(oracles.X_HALF_P2.items()))
def test_x_half_p2(n, text):
    assert corollary_exact(2, n, "1/2") == ExactConst.parse(text)


def test_unified_pi_formula():
    for n in range(31):
        assert corollary_exact(1, n, "1") == unified_pi_formula(n)


def test_theorem_substitution_matches_direct_formulas():
    for p in range(1, 5):
        for n in range(31):
            assert corollary_exact(p, n, "1") == corollary_formula(p, n), (p, n)


def test_x_one_constants():
    assert corollary_exact(2, 1, "1") == ExactConst.parse(oracles.P2_N1_AT_ONE)
    assert corollary_exact(3, 0, "1") == ExactConst.parse(oracles.P3_N0_AT_ONE)


def test_special_points_are_consistent():
    with mpmath.workdps(30):
        for token, (x, a, s) in SPECIAL_POINTS.items():
            xv = x.to_mpf()
            assert abs(mpmath.asin(xv) - a.to_mpf()) < 1e-25
            assert abs(mpmath.sqrt(1 - xv**2) - s.to_mpf()) < 1e-25


def test_exact_values_match_series_at_special_points():
    ctx = PrecisionCtx(40)
    for token in ("1/2", "sqrt2/2", "sqrt3/2"):
        x = SPECIAL_POINTS[token][0]
        for p in range(1, 5):
            for n in range(9):
                with mpmath.workdps(50):
                    exact = corollary_exact(p, n, token).to_mpf()
                    rep = lhs_series(p, n, x.to_mpf(), ctx)
                    assert abs(exact - rep.value) < mpmath.mpf(10) ** -35, (token, p, n)


def test_unsupported_point():
    with pytest.raises(ValueError):
        corollary_exact(1, 0, "1/3")


@pytest.mark.parametrize("n", [0, 1, 5])
def test_rearrangement_consistency(n):
    assert corollary_45_consistency(n)


def test_rearrangement_sign_matters():
    # adding the tail instead of subtracting it breaks the even identity at n = 0
    (lhs, rhs), _ = corollary_45_sides(0)
    tail = ExactConst.pi_power(2, F(1, 2))
    assert lhs == ExactConst.pi_power(2) - tail
    assert lhs != ExactConst.pi_power(2) + tail


def test_render():
    assert rhs_theorem(1, 1).render() == "1 * x^-2 * [(-1)*sqrt(1-x^2) + (1)]"
    assert ClosedFormExpr().render() == "0"
