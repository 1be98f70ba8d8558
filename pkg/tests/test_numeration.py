"""
Tests for alpha-numeration: admissibility, Psi, Lambda and their inverses
"""

import sys
from fractions import Fraction
from functools import cmp_to_key
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from src.cfe.cfe_core import mu_depth
from src.errors.error_handling_system import (
    DomainError,
    ExpressionParseError,
    IncomparableStreams,
    NotAdmissible,
    NotConvertible,
    NotGridPoint,
    OutOfRange
)
from src.exact_numbers.expression_parser import parse_exact
from src.numeration import (
    DigitWord,
    ImproperExpansion,
    Tail,
    compare_alo,
    compare_rlo,
    enumerate_words,
    format_word,
    improper_value,
    is_admissible,
    lambda_inv,
    lambda_stream,
    lambda_tilde,
    lambda_tilde_inv,
    lambda_value,
    normalize_improper,
    parse_word,
    psi,
    psi_inv,
    reflect,
    word_count,
    word_to_json
)
from src.oracles.brute_force import oracle_enumerate_admissible

GOLDEN = parse_exact("golden")
TWO_FIFTHS = parse_exact("2/5")


@st.composite
def rational_alphas(draw, max_denominator=40):
    q = draw(st.integers(2, max_denominator))
    p = draw(st.integers(1, q - 1))
    return parse_exact(f"{p}/{q}")


def test_two_fifths_words():
    words = [w.digits for w in enumerate_words(TWO_FIFTHS)]
    assert words == [(), (1,), (2,), (1, 1), (2, 1)]
    assert word_count(TWO_FIFTHS) == 5


@pytest.mark.parametrize("alpha,digits,expected", [
    (TWO_FIFTHS, (0, 1), False),
    (TWO_FIFTHS, (1, 1), True),
    (TWO_FIFTHS, (3,), False),
    (TWO_FIFTHS, (1, 1, 1), False),
    (GOLDEN, (1, 0, 1), True),
    (GOLDEN, (0, 1), False),
    (GOLDEN, (1, 1, 0, 0, 1), False),
])
def test_admissibility(alpha, digits, expected):
    assert is_admissible(alpha, digits) is expected


def test_psi_examples():
    assert psi(TWO_FIFTHS, ()) == 0
    assert psi(TWO_FIFTHS, (1, 1)) == 3
    assert psi(GOLDEN, (1, 1, 1)) == 4
    with pytest.raises(NotAdmissible):
        psi(GOLDEN, (0, 1))


def test_psi_inv_examples():
    assert psi_inv(GOLDEN, 0).is_zero
    assert psi_inv(GOLDEN, 4).digits == (1, 1, 1)
    assert psi_inv(GOLDEN, 3).digits == (1, 0, 1)
    assert psi_inv(TWO_FIFTHS, 4).digits == (2, 1)
    with pytest.raises(OutOfRange):
        psi_inv(TWO_FIFTHS, 5)
    with pytest.raises(DomainError):
        psi_inv(GOLDEN, -1)


def test_lambda_examples():
    assert lambda_value(TWO_FIFTHS, (1, 1)) == Fraction(1, 5)
    assert lambda_value(TWO_FIFTHS, (2, 1)) == Fraction(3, 5)
    assert lambda_value(GOLDEN, ()) == 0


def test_lambda_inv_examples():
    assert lambda_inv(TWO_FIFTHS, 0).is_zero
    assert lambda_inv(TWO_FIFTHS, Fraction(3, 5)).digits == (2, 1)
    assert lambda_inv(GOLDEN, (GOLDEN * 4).frac()).digits == (1, 1, 1)


def test_lambda_inv_needs_grid_point():
    with pytest.raises(NotGridPoint, match="encode --real"):
        lambda_inv(TWO_FIFTHS, Fraction(1, 2))
    word, eps = lambda_tilde_inv(TWO_FIFTHS, Fraction(1, 2))
    assert (word.digits, eps) == ((1,), Fraction(1, 2))
    with pytest.raises(DomainError):
        lambda_inv(GOLDEN, 1)


def test_lambda_stream_of_non_terminating_real():
    stream = lambda_stream(GOLDEN, Fraction(1, 2))
    digits = stream.take(12)
    assert not stream.terminated
    assert all(0 <= d <= 1 for d in digits)
    for k in (3, 6, 11):
        lo, hi = stream.enclosure(k)
        assert lo < Fraction(1, 2) < hi


def test_lambda_tilde():
    word, eps = lambda_tilde_inv(TWO_FIFTHS, Fraction(1, 2))
    assert word.digits == (1,)
    assert eps == Fraction(1, 2)
    assert lambda_tilde(TWO_FIFTHS, word, eps) == Fraction(1, 2)
    assert lambda_tilde(TWO_FIFTHS, (), 0) == 0
    assert lambda_tilde(TWO_FIFTHS, word, Fraction(1, 3)) < lambda_tilde(TWO_FIFTHS, word, Fraction(1, 2))
    with pytest.raises(DomainError):
        lambda_tilde(GOLDEN, (), 0)


@given(rational_alphas(), st.data())
@settings(max_examples=100)
def test_lambda_tilde_round_trip(alpha, data):
    q = alpha.a.denominator
    beta = Fraction(data.draw(st.integers(0, 4 * q - 1)), 4 * q)
    word, eps = lambda_tilde_inv(alpha, beta)
    assert lambda_tilde(alpha, word, eps) == beta


def test_rlo_and_alo_orders():
    assert compare_rlo(DigitWord(TWO_FIFTHS, (2,)), DigitWord(TWO_FIFTHS, (0, 1))) == -1
    assert compare_alo(DigitWord(GOLDEN, (1, 1)), DigitWord(GOLDEN, (1,))) == -1
    maxes = DigitWord(GOLDEN, (1, 0), Tail.MAXES)
    assert compare_rlo(maxes, DigitWord(GOLDEN, (1, 1, 1))) == -1
    assert compare_rlo(DigitWord(GOLDEN, (1, 0, 1)), DigitWord(GOLDEN, (1, 0, 1))) == 0


def test_rlo_rejects_infinite_streams():
    stream = lambda_stream(GOLDEN, Fraction(1, 2))
    with pytest.raises(IncomparableStreams):
        compare_rlo(stream, DigitWord(GOLDEN, (1,)))


@pytest.mark.parametrize("q", range(2, 31))
def test_order_isomorphism_exhaustive(q):
    for p in range(1, q):
        if Fraction(p, q).denominator != q:
            continue
        alpha = parse_exact(f"{p}/{q}")
        words = [psi_inv(alpha, n) for n in range(q)]
        assert sorted(words, key=cmp_to_key(compare_rlo)) == words
        depth = mu_depth(alpha)
        assert [tuple(w.prefix(depth)) for w in words] == oracle_enumerate_admissible(alpha)
        by_alo = sorted(words, key=cmp_to_key(compare_alo))
        values = [lambda_value(alpha, w) for w in by_alo]
        assert values == sorted(values)
        assert len(set(values)) == q
        for n, w in enumerate(words):
            assert psi(alpha, w) == n
            assert lambda_value(alpha, w) == (alpha * n).frac()


@pytest.mark.parametrize("text", ["golden", "sqrt2m1", "sqrt(3)-1", "(-3+sqrt(21))/6"])
def test_fundamental_identity_irrational(text):
    alpha = parse_exact(text)
    for n in range(300):
        w = psi_inv(alpha, n)
        assert psi(alpha, w) == n
        assert lambda_value(alpha, w) == (alpha * n).frac()
        assert lambda_inv(alpha, (alpha * n).frac()) == w


def test_sqrt3_minus_1_expansions():
    alpha = parse_exact("sqrt(3)-1")
    # q_0..q_3 = 1, 1, 3, 4
    assert psi_inv(alpha, 3).digits == (1, 2)
    assert psi_inv(alpha, 7).digits == (1, 2, 0, 1)
    assert lambda_value(alpha, (1, 2, 0, 1)) == (alpha * 7).frac()
    assert not is_admissible(alpha, (0, 2))


@pytest.mark.slow
@pytest.mark.parametrize("text", ["golden", "sqrt2m1", "sqrt(3)-1"])
def test_fundamental_identity_irrational_to_ten_thousand(text):
    alpha = parse_exact(text)
    for n in range(10 ** 4 + 1):
        assert lambda_value(alpha, psi_inv(alpha, n)) == (alpha * n).frac()


@pytest.mark.slow
def test_fundamental_identity_every_rational_to_sixty():
    for q in range(2, 61):
        for p in range(1, q):
            if Fraction(p, q).denominator != q:
                continue
            alpha = parse_exact(f"{p}/{q}")
            for n in range(q):
                assert lambda_value(alpha, psi_inv(alpha, n)) == (alpha * n).frac()


def test_reflect_example():
    w = reflect(TWO_FIFTHS, (1,))
    assert w.alpha == Fraction(3, 5)
    assert w.digits == (1,)
    assert lambda_value(w.alpha, w) == Fraction(3, 5)
    assert reflect(TWO_FIFTHS, (2, 1)).digits[:2] == (1, 1)


def test_reflect_domain():
    with pytest.raises(DomainError):
        reflect(GOLDEN, (1,))


@given(rational_alphas(), st.data())
@settings(max_examples=100)
def test_reflect_complements_values(alpha, data):
    if not alpha < Fraction(1, 2):
        return
    q = alpha.a.denominator
    n = data.draw(st.integers(1, q - 1))
    w = psi_inv(alpha, n)
    reflected = reflect(alpha, w)
    assert lambda_value(reflected.alpha, reflected) == 1 - lambda_value(alpha, w)


def test_normalize_proper_word_unchanged():
    w = DigitWord(TWO_FIFTHS, (2, 1))
    assert normalize_improper(TWO_FIFTHS, w) == w
    with pytest.raises(NotConvertible):
        normalize_improper(TWO_FIFTHS, DigitWord(TWO_FIFTHS, (0, 1)))


@pytest.mark.parametrize("text", ["2/5", "7/12", "16/113", "13/21", "5/17"])
def test_normalize_improper_keeps_value(text):
    alpha = parse_exact(text)
    depth = mu_depth(alpha)
    for start in range(1, depth + 1):
        for n in range(alpha.a.denominator):
            prefix = psi_inv(alpha, n).digits
            if len(prefix) > start - 1:
                continue
            expansion = ImproperExpansion(prefix, start)
            value = improper_value(alpha, expansion)
            if value.sign() < 0 or value > 1:
                with pytest.raises(NotConvertible):
                    normalize_improper(alpha, expansion)
                continue
            word = normalize_improper(alpha, expansion)
            assert lambda_value(alpha, word) == (0 if value == 1 else value)


def test_golden_improper_expansion_telescopes():
    # (1, 0, a3, 0, a5, 0, ...) sums to delta'_0 - delta'_1 = 1
    assert improper_value(GOLDEN, ImproperExpansion((1,), 3)) == 1
    assert normalize_improper(GOLDEN, ImproperExpansion((1,), 3)).is_zero


def test_word_text_forms():
    w = parse_word(GOLDEN, "(1,0,1)|0")
    assert w.digits == (1, 0, 1) and w.tail is Tail.ZEROS
    assert format_word(w) == "(1,0,1)|0"
    assert parse_word(GOLDEN, "[1,1,1]") == psi_inv(GOLDEN, 4)
    assert parse_word(GOLDEN, "(1)_golden|max").tail is Tail.MAXES
    assert word_to_json(parse_word(GOLDEN, "(1,0)|max")) == {"digits": [1, 0], "tail": "max"}
    with pytest.raises(ExpressionParseError):
        parse_word(GOLDEN, "(1,a)|0")
