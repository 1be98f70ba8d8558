"""
Tests for the skew product, the shift structure and germ successors
"""

import sys
from fractions import Fraction
from functools import cmp_to_key
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from src.cfe.cfe_core import cfe_of, mu_depth
from src.dynamics import (
    DigitBlock,
    GermElement,
    SkewState,
    first_digit_block,
    germ_successor,
    germ_value,
    in_trapezoid,
    k_alpha_decomposition_check,
    same_germ,
    shift_alpha,
    shift_block_word,
    shift_integer,
    shift_real,
    shift_real_case,
    shifted_word,
    skew_orbit,
    skew_step
)
from src.errors.error_handling_system import DomainError, IndexBeyondDepth, NoSuccessor
from src.exact_numbers.expression_parser import parse_exact
from src.numeration import (
    DigitWord,
    Tail,
    compare_alo,
    enumerate_words,
    lambda_stream,
    psi,
    psi_inv,
    word_count
)

GOLDEN = parse_exact("golden")
TWO_FIFTHS = parse_exact("2/5")
QUADRATICS = ["golden", "sqrt2m1", "(-3+sqrt(21))/6", "(-5+sqrt(29))/2", "sqrt(3)-1"]
RATIONALS = ["2/5", "7/12", "16/113", "13/21", "5/17", "3/7"]


# Skew product

def test_skew_step_with_zero_y():
    step = skew_step(SkewState(TWO_FIFTHS, 0))
    assert step.digits == (2, 0)
    assert step.next == SkewState(Fraction(1, 2), 0)


def test_skew_state_outside_trapezoid():
    with pytest.raises(DomainError):
        SkewState(Fraction(1, 2), Fraction(-1, 2))
    assert not in_trapezoid(0, 0)
    assert in_trapezoid(Fraction(1, 2), Fraction(-1, 3))


@pytest.mark.parametrize("text", QUADRATICS + RATIONALS)
def test_skew_digits_are_cfe_and_lambda_digits(text):
    alpha = parse_exact(text)
    for n in (0, 1, 3, 4, 7):
        if alpha.is_rational and n >= alpha.a.denominator:
            continue
        beta = (alpha * n).frac()
        stream = lambda_stream(alpha, beta)
        cfe = cfe_of(alpha)
        points = list(skew_orbit(alpha, beta, 40))
        depth = mu_depth(alpha)
        expected_length = 40 if not alpha.is_rational else min(40, depth)
        assert len(points) == expected_length
        for point in points:
            assert point.digits == (cfe.digit(point.k), stream.digit(point.k))
        if alpha.is_rational:
            assert points[-1].exhausted


def test_golden_skew_orbit_from_three_alpha():
    beta = (GOLDEN * 3).frac()
    pairs = [point.digits for point in skew_orbit(GOLDEN, beta, 10)]
    assert pairs[:3] == [(1, 1), (1, 0), (1, 1)]
    assert pairs[3:] == [(1, 0)] * 7


@given(st.integers(2, 400), st.integers(1, 399), st.integers(-399, 399))
@settings(max_examples=300)
def test_skew_step_stays_in_trapezoid(den, num, y_num):
    x = Fraction(num % den or 1, den)
    y = Fraction(y_num, den) * x
    if not in_trapezoid(x, y):
        return
    step = skew_step(SkewState(x, y))
    if (1 / x).denominator != 1:
        assert step.next is not None
        assert in_trapezoid(step.next.x, step.next.y)


# Shift structure

def test_shift_alpha():
    assert all(shift_alpha(GOLDEN, k) == GOLDEN for k in range(6))
    assert shift_alpha(TWO_FIFTHS, 1) == Fraction(1, 2)
    assert shift_alpha(TWO_FIFTHS, 2) == 0
    with pytest.raises(IndexBeyondDepth):
        shift_alpha(TWO_FIFTHS, 3)


@pytest.mark.parametrize("text", QUADRATICS)
def test_shifted_alpha_digits(text):
    alpha = parse_exact(text)
    for k in range(4):
        assert cfe_of(shift_alpha(alpha, k)).take(8)[1:] == cfe_of(alpha).take(8 + k)[1 + k:]


def test_shift_integer_examples():
    assert shift_integer(GOLDEN, 0, 3) == 0
    assert shift_integer(GOLDEN, 4, 1) == 2
    assert psi_inv(shift_alpha(GOLDEN, 1), 2).digits == (1, 1)
    # n = (1, 0, 1): n_2 = 0 adds one to the floor
    assert psi_inv(GOLDEN, 3).digits == (1, 0, 1)
    assert shift_integer(GOLDEN, 3, 1) == (GOLDEN * 3).floor() + 1
    assert shifted_word(GOLDEN, psi_inv(GOLDEN, 3), 1).digits == (1, 1)


@pytest.mark.parametrize("text", QUADRATICS[:3] + RATIONALS[:4])
def test_shift_integer_matches_shifted_word(text):
    alpha = parse_exact(text)
    top = 200 if not alpha.is_rational else alpha.a.denominator
    max_k = 4 if not alpha.is_rational else max(0, mu_depth(alpha) - 2)
    for nu in range(top):
        n = psi_inv(alpha, nu)
        for k in range(max_k + 1):
            assert shift_integer(alpha, nu, k) == psi(shift_alpha(alpha, k), shifted_word(alpha, n, k))


def test_shift_integer_beyond_depth():
    with pytest.raises(IndexBeyondDepth):
        shift_integer(TWO_FIFTHS, 1, 1)


def test_shift_real_cases():
    assert shift_real(GOLDEN, 0, 3) == 0

    four = shift_real_case(GOLDEN, (GOLDEN * 4).frac(), 1)
    assert four.case == 1
    assert four.gamma == four.word_value == 2 * GOLDEN - 1

    three = shift_real_case(GOLDEN, (GOLDEN * 3).frac(), 1)
    assert three.case == 2
    assert three.gamma < 0
    assert three.word_value == shift_real(GOLDEN, (GOLDEN * 3).frac(), 2)


@pytest.mark.parametrize("text", QUADRATICS[:3])
def test_shift_real_characterisation(text):
    alpha = parse_exact(text)
    for n in range(1, 120):
        beta = (alpha * n).frac()
        for k in range(4):
            shifted = shift_real_case(alpha, beta, k)
            if shifted.case == 1:
                assert shifted.gamma == shifted.word_value
            else:
                assert shifted.gamma < 0
                assert shift_real(alpha, beta, k + 1) == shifted.word_value


def test_shift_real_non_terminating_case():
    shifted = shift_real_case(GOLDEN, Fraction(1, 2), 2)
    assert shifted.word is None
    assert shifted.case in (1, 2)
    if shifted.case == 2:
        assert shifted.gamma < 0


def test_first_digit_blocks():
    assert first_digit_block(TWO_FIFTHS, (1,)) == DigitBlock(1)
    assert first_digit_block(TWO_FIFTHS, (2, 1)) == DigitBlock(2)
    assert first_digit_block(GOLDEN, (1, 0, 1)) == DigitBlock(1, primed=True)
    assert str(DigitBlock(1, primed=True)) == "E'_1"
    assert shift_block_word(GOLDEN, (1, 0, 1)) == DigitWord(GOLDEN, (1,))
    with pytest.raises(DomainError):
        shift_block_word(GOLDEN, ())


@pytest.mark.parametrize("text", ["2/5", "7/12", "13/21", "5/17", "3/7", "11/30", "17/40"])
def test_block_shifts_are_monotone_bijections(text):
    alpha = parse_exact(text)
    blocks = {}
    for w in enumerate_words(alpha):
        if w.is_zero:
            continue
        blocks.setdefault(first_digit_block(alpha, w), []).append(w)

    t1 = shift_alpha(alpha, 1)
    for block, words in blocks.items():
        ordered = sorted(words, key=cmp_to_key(compare_alo))
        images = [shift_block_word(alpha, w) for w in ordered]
        assert len(set(images)) == len(images)
        for before, after in zip(images, images[1:]):
            expected = 1 if block.primed else -1
            assert compare_alo(after, before) == expected
        if not block.primed:
            assert len(images) == word_count(t1)


def test_k_alpha_decomposition():
    report = k_alpha_decomposition_check(TWO_FIFTHS)
    assert report
    assert report.size == 5
    assert bool(k_alpha_decomposition_check(Fraction(1, 2)))
    for text in QUADRATICS[:3]:
        assert k_alpha_decomposition_check(parse_exact(text), depth=6)
    for text in RATIONALS:
        assert k_alpha_decomposition_check(parse_exact(text))


def test_k_alpha_decomposition_domain():
    with pytest.raises(DomainError):
        k_alpha_decomposition_check(0)
    with pytest.raises(DomainError):
        k_alpha_decomposition_check(GOLDEN)


# Germ classes

def test_successor_of_zero_is_one():
    assert germ_successor(GOLDEN, DigitWord(GOLDEN)) == psi_inv(GOLDEN, 1)


@pytest.mark.parametrize("text", QUADRATICS[:3])
def test_successor_rotates_by_alpha(text):
    alpha = parse_exact(text)
    w = DigitWord(alpha)
    for k in range(500):
        assert germ_value(alpha, w) == (alpha * k).frac()
        following = germ_successor(alpha, w)
        assert same_germ(alpha, w, following)
        w = following


@pytest.mark.parametrize("text", RATIONALS)
def test_successor_walks_the_rational_grid(text):
    alpha = parse_exact(text)
    w = DigitWord(alpha)
    q = alpha.a.denominator
    for n in range(q - 1):
        assert w == psi_inv(alpha, n)
        w = germ_successor(alpha, w)
    with pytest.raises(NoSuccessor):
        germ_successor(alpha, w)


def test_maximal_word_has_no_successor():
    with pytest.raises(NoSuccessor):
        germ_successor(GOLDEN, DigitWord(GOLDEN, (), Tail.MAXES))


def test_successor_on_maxes_tail_words():
    start = DigitWord(GOLDEN, (1, 0), Tail.MAXES)
    value = germ_value(GOLDEN, start)
    assert value == 2 - 2 * GOLDEN
    following = germ_successor(GOLDEN, start)
    assert following.tail is Tail.MAXES
    assert germ_value(GOLDEN, following) == (value + GOLDEN).frac()


def test_successor_on_streams():
    stream = lambda_stream(GOLDEN, Fraction(1, 2))
    element = germ_successor(GOLDEN, stream)
    assert isinstance(element, GermElement)
    assert germ_value(GOLDEN, element) == (GOLDEN + Fraction(1, 2)).frac()
    second = germ_successor(GOLDEN, element)
    assert germ_value(GOLDEN, second) == (GOLDEN * 2 + Fraction(1, 2)).frac()
    assert same_germ(GOLDEN, stream, second)


def test_same_germ():
    assert same_germ(GOLDEN, psi_inv(GOLDEN, 5), psi_inv(GOLDEN, 8))
    assert not same_germ(GOLDEN, DigitWord(GOLDEN), DigitWord(GOLDEN, (), Tail.MAXES))
    half = lambda_stream(GOLDEN, Fraction(1, 2))
    shifted = lambda_stream(GOLDEN, (GOLDEN + Fraction(1, 2)).frac())
    third = lambda_stream(GOLDEN, Fraction(1, 3))
    assert same_germ(GOLDEN, half, shifted)
    assert not same_germ(GOLDEN, half, third)
    assert not same_germ(GOLDEN, half, DigitWord(GOLDEN))
