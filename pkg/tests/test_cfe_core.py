"""
Tests for extended continued fractions, convergents and best rationals
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from src.cfe.cfe_core import (
    best_rational_between,
    best_sided_rational_approximations,
    cfe_of,
    cfe_value,
    convergent,
    delta,
    format_cfe,
    mu_depth,
    parse_cfe,
    period_of,
    semiconvergents
)
from src.errors.error_handling_system import (
    EmptyInput,
    EqualEndpoints,
    ExpressionParseError,
    IndexBeyondDepth
)
from src.exact_numbers.exact_real import INFINITY
from src.exact_numbers.expression_parser import parse_exact
from src.oracles.brute_force import oracle_best_rational, oracle_semiconvergents, oracle_sided_rationals

GOLDEN = parse_exact("golden")


@pytest.mark.parametrize("x,digits", [
    (Fraction(9, 4), [2, 3, 1]),
    (Fraction(2, 5), [0, 2, 1, 1]),
    (Fraction(7), [6, 1]),
    (Fraction(-3), [-4, 1]),
    (Fraction(1, 2), [0, 1, 1]),
])
def test_rational_digits(x, digits):
    assert cfe_of(x).finite_digits() == digits


def test_rational_stream_ends_with_infinity():
    stream = cfe_of(Fraction(9, 4))
    assert stream.digit(3) is INFINITY
    assert list(stream) == [2, 3, 1]


def test_golden_digits():
    assert cfe_of(GOLDEN).take(6) == [0, 1, 1, 1, 1, 1]


@pytest.mark.parametrize("digits,value", [
    ([2, 3, 1], Fraction(9, 4)),
    ([5], Fraction(5)),
    ([0, 2, 1, 1], Fraction(2, 5)),
    ([0, 2, 2], Fraction(2, 5)),
    ([1, INFINITY], Fraction(1)),
])
def test_cfe_value(digits, value):
    assert cfe_value(digits) == value


def test_cfe_value_of_empty_list():
    with pytest.raises(EmptyInput):
        cfe_value([])


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6))
@settings(max_examples=300)
def test_rational_round_trip(p, q):
    x = Fraction(p, q)
    digits = cfe_of(x).finite_digits()
    assert cfe_value(digits) == x
    assert digits[-1] == 1


def test_depth():
    assert mu_depth(7) == 0
    assert mu_depth(Fraction(9, 4)) == 1
    assert mu_depth(GOLDEN) is INFINITY


@given(st.integers(1, 500), st.integers(2, 500), st.integers(-5, 5))
def test_depth_is_shift_invariant(p, q, n):
    x = Fraction(p % q, q)
    if x.denominator == 1:
        return
    assert mu_depth(x + n) == mu_depth(x)
    assert mu_depth((1 / x) % 1) == mu_depth(x) - 1


def test_golden_convergent_denominators():
    assert [convergent(GOLDEN, k)[1] for k in range(6)] == [1, 1, 2, 3, 5, 8]


def test_convergents_of_two_fifths():
    assert convergent(Fraction(2, 5), 3) == (2, 5)
    assert convergent(Fraction(2, 5), -1) == (1, 0)
    with pytest.raises(IndexBeyondDepth):
        convergent(Fraction(2, 5), 4)


def test_deltas_of_two_fifths():
    alpha = Fraction(2, 5)
    assert delta(alpha, -2) == alpha
    assert delta(alpha, -1) == 1
    assert [delta(alpha, i) for i in range(3)] == [Fraction(2, 5), Fraction(1, 5), Fraction(1, 5)]
    with pytest.raises(IndexBeyondDepth):
        delta(alpha, 3)


def test_golden_delta_ratio_is_golden():
    for i in range(1, 8):
        assert delta(GOLDEN, i) / delta(GOLDEN, i - 1) == GOLDEN


@pytest.mark.parametrize("x,bound,expected", [
    (GOLDEN, 5, [Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(3, 5)]),
    (Fraction(2, 5), 5, [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)]),
    (Fraction(1, 2), 2, [Fraction(1), Fraction(1, 2)]),
    (Fraction(9, 4), 4, [Fraction(1), Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 3), Fraction(9, 4)]),
])
def test_semiconvergents(x, bound, expected):
    assert semiconvergents(x, bound) == expected


@pytest.mark.parametrize("text", ["golden", "sqrt2m1", "(-3+sqrt(21))/6", "7/12", "16/113", "13/21"])
def test_semiconvergents_match_denominator_scan(text):
    x = parse_exact(text)
    assert semiconvergents(x, 200) == oracle_semiconvergents(x, 200)


@pytest.mark.parametrize("text", ["golden", "sqrt(3)-1", "2/5", "7/12", "13/21"])
def test_semiconvergents_are_the_one_sided_approximations(text):
    x = parse_exact(text)
    sided = set(best_sided_rational_approximations(x, "left", 100))
    sided |= set(best_sided_rational_approximations(x, "right", 100))
    sided.discard(Fraction(0))
    assert semiconvergents(x, 100) == sorted(sided, key=lambda f: (f.denominator, f))


@pytest.mark.parametrize("x,side,bound,expected", [
    (GOLDEN, "left", 5, [Fraction(0), Fraction(1, 2), Fraction(3, 5)]),
    (GOLDEN, "right", 3, [Fraction(1), Fraction(2, 3)]),
    (Fraction(1, 2), "left", 1, [Fraction(0)]),
])
def test_best_sided_rational_approximations(x, side, bound, expected):
    assert best_sided_rational_approximations(x, side, bound) == expected


@pytest.mark.parametrize("side", ["left", "right"])
@pytest.mark.parametrize("text", ["golden", "sqrt2m1", "2/5", "7/12", "16/113"])
def test_best_sided_match_scan(text, side):
    x = parse_exact(text)
    assert best_sided_rational_approximations(x, side, 150) == oracle_sided_rationals(x, side, 150)


def test_best_rational_between_examples():
    assert best_rational_between(Fraction(3, 10), Fraction(17, 50)) == Fraction(1, 3)
    assert best_rational_between(Fraction(17, 50), Fraction(3, 10)) == Fraction(1, 3)
    assert best_rational_between(Fraction(2, 5), GOLDEN) == Fraction(1, 2)


def test_best_rational_between_semiconvergent_endpoint():
    theta = Fraction(3, 5)
    assert best_rational_between(theta, GOLDEN) == theta


def test_best_rational_between_equal_endpoints():
    with pytest.raises(EqualEndpoints):
        best_rational_between(Fraction(1, 3), Fraction(1, 3))


@given(st.integers(0, 899), st.integers(0, 899))
@settings(max_examples=200)
def test_best_rational_between_matches_scan(a, b):
    if a == b:
        return
    theta, theta2 = Fraction(a, 900), Fraction(b, 900)
    best = best_rational_between(theta, theta2)
    assert best == oracle_best_rational(theta, theta2, 1000)
    assert mu_depth(best) <= min(mu_depth(theta), mu_depth(theta2))


def test_period_of_quadratics():
    assert period_of(GOLDEN) == ([0], [1])
    assert period_of(parse_exact("sqrt2m1")) == ([0], [2])
    pre, period = period_of(parse_exact("(-3+sqrt(21))/6"))
    assert pre == [0]
    assert period == [3, 1]


def test_format_and_parse_cfe():
    assert format_cfe([2, 3, 1]) == "[2,3,1]"
    assert parse_cfe(" [0, 2, 1, 1] ") == [0, 2, 1, 1]
    with pytest.raises(ExpressionParseError):
        parse_cfe("[1;2]")
