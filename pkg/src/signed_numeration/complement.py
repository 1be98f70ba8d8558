"""
Numeration Toolkit - Signed Numeration

Extension of the alpha-numeration from N to Z. A negative integer is coded by
a word whose tail is the maximal digits a_k; it is obtained from the
complement m - w of the code w of its absolute value, where m = (a_1 + 1, a_2,
a_3, ...) satisfies L(m) = 1, followed by a left-to-right conversion sweep that
repairs inadmissible zero runs without changing the L value.

Key Features:
- ComplementBase and the extended linear map L(d) = sum d_k delta'_(k-1)
- Conversion sweep with per-step snapshots for value-preservation checks
- Psi~ on all of Z: -1 - sum (a_k - e_k) q_(k-1) for maxes-tail words
- Rational alpha: maxes tail runs up to depth r, Psi~ = Psi - q_(r+1), |n| < q_(r+1)
"""

from dataclasses import dataclass
from typing import Iterator, List

import structlog

from src.errors.error_handling_system import (
    DomainError,
    NotAdmissible,
    OutOfRange,
    UnsupportedTail,
    ZeroWord
)
from src.exact_numbers.exact_real import ExactReal
from src.numeration.digit_word import DigitWord, Tail, numeration_base
from src.numeration.numeration import as_word, is_admissible, linear_value, psi, psi_inv

logger = structlog.get_logger().bind(component="signed_numeration")


def _opposite(tail: Tail) -> Tail:
    return Tail.MAXES if tail is Tail.ZEROS else Tail.ZEROS


@dataclass(frozen=True)
class ComplementBase:
    """m_1 = a_1 + 1, m_k = a_k for k > 1"""
    alpha: ExactReal

    def __post_init__(self):
        object.__setattr__(self, 'alpha', numeration_base(self.alpha).alpha)

    @property
    def m(self) -> DigitWord:
        base = numeration_base(self.alpha)
        return DigitWord(self.alpha, (base.a(1) + 1,), Tail.MAXES)

    def complement_sequence(self, w) -> DigitWord:
        """m - w digit by digit; the tail flips"""
        w = as_word(self.alpha, w)
        m = self.m
        n = len(w)
        digits = [m.digit(j) - w.digit(j) for j in range(1, max(n, 1) + 1)]
        return DigitWord(self.alpha, tuple(digits), _opposite(w.tail))


def l_alpha(alpha, w) -> ExactReal:
    """L(d) = sum d_k delta'_(k-1), the tail of maximal digits summed in closed form"""
    w = as_word(alpha, w)
    if not isinstance(w.tail, Tail):
        raise UnsupportedTail(f"unsupported tail {w.tail!r}")
    return linear_value(w.alpha, w.digits, w.tail)


def relation_word(alpha, r: int, s: int) -> DigitWord:
    """(0^r, 1, (max, 0)^(s-1), max, -1, 0, ...), a word with L value 0"""
    base = numeration_base(alpha)
    if r < 0 or s < 1:
        raise DomainError(f"relation word needs r >= 0 and s >= 1, got r={r}, s={s}")
    last = r + 2 * s + 1
    if base.is_rational and last > base.depth:
        raise DomainError(f"relation word reaches position {last} beyond depth {base.depth}")
    digits = [0] * r + [1]
    for t in range(1, s):
        digits += [base.a(r + 2 * t), 0]
    digits += [base.a(r + 2 * s), -1]
    return DigitWord(base.alpha, tuple(digits))


class _Sweep:
    """Mutable 1-indexed digit buffer for the conversion sweep"""

    def __init__(self, base, digits: List[int], tail: Tail):
        self.base = base
        self.tail = tail
        self.fixed = tail is Tail.ZEROS or base.is_rational
        self.e = [0] + list(digits)
        if tail is Tail.ZEROS:
            self.e += [0] * 3
        elif base.is_rational:
            while len(self.e) <= base.depth:
                self.e.append(base.a(len(self.e)))
        self.touched = len(digits)

    def ensure(self, k: int):
        while not self.fixed and len(self.e) <= k:
            self.e.append(self.base.a(len(self.e)))

    def exists(self, k: int) -> bool:
        self.ensure(k)
        return k < len(self.e)

    def put(self, k: int, value: int):
        self.ensure(k)
        self.e[k] = value
        self.touched = max(self.touched, k)

    def snapshot(self) -> DigitWord:
        return DigitWord(self.base.alpha, tuple(self.e[1:]), self.tail)


def _conversion(base, start: DigitWord) -> Iterator[DigitWord]:
    a = base.a
    buf = _Sweep(base, list(start.digits), start.tail)
    yield buf.snapshot()
    j = 1
    while buf.exists(j) and j <= buf.touched + 2:
        if buf.e[j] != 0:
            j += 1
            continue
        end = j
        while buf.exists(end + 1) and buf.e[end + 1] == 0:
            end += 1
        if not buf.exists(end + 1):
            # zeros up to the end: the remaining digits are all 0
            break
        r, length = j - 1, end - j + 1
        if r >= 1 and buf.e[r] == a(r):
            r, length = r + 1, length - 1
        if length == 0:
            j = end + 1
            continue
        if length % 2 == 0:
            s = length // 2
            buf.put(r + 1, 1)
            for t in range(1, s):
                buf.put(r + 2 * t, a(r + 2 * t))
                buf.put(r + 2 * t + 1, 0)
            buf.put(r + 2 * s, a(r + 2 * s))
            j = r + 2 * s + 1
            case = "even_run"
        else:
            s = (length + 1) // 2
            buf.put(r, buf.e[r] + 1)
            for t in range(1, s):
                buf.put(r + 2 * t - 1, a(r + 2 * t - 1))
                buf.put(r + 2 * t, 0)
            buf.put(r + 2 * s - 1, a(r + 2 * s - 1))
            j = r + 2 * s
            case = "odd_run"
        buf.put(j, buf.e[j] - 1)
        logger.debug("conversion_rewrite", case=case, position=r, run_length=length)
        yield buf.snapshot()


def conversion_steps(alpha, w) -> Iterator[DigitWord]:
    """m - w, then the sequence after every rewrite of the conversion sweep"""
    base = numeration_base(alpha)
    w = as_word(alpha, w)
    if w.is_zero:
        raise ZeroWord("the complement of the zero word is the zero word")
    if not is_admissible(base.alpha, w):
        raise NotAdmissible(f"{w} is not admissible for alpha = {base.alpha}")
    start = ComplementBase(base.alpha).complement_sequence(w)
    yield from _conversion(base, start)


def cfe_complement(alpha, w) -> DigitWord:
    """The admissible word equivalent to m - w; its Lambda value is 1 - Lambda(w)"""
    result = None
    for result in conversion_steps(alpha, w):
        pass
    if not is_admissible(result.alpha, result):
        raise NotAdmissible(f"conversion of {w} ended with inadmissible {result}")
    return result


def psi_signed(alpha, w) -> int:
    """Psi on zeros-tail words, -1 - sum (a_k - e_k) q_(k-1) on maxes-tail words"""
    base = numeration_base(alpha)
    w = as_word(alpha, w)
    if w.tail is Tail.ZEROS:
        return psi(base.alpha, w)
    if not is_admissible(base.alpha, w):
        raise NotAdmissible(f"{w} is not admissible for alpha = {base.alpha}")
    if base.is_rational:
        materialized = w.prefix(base.depth)
        return sum(d * base.q(j - 1) for j, d in enumerate(materialized, start=1)) - base.denominator
    return -1 - sum((base.a(j) - d) * base.q(j - 1) for j, d in enumerate(w.digits, start=1))


def psi_signed_inv(alpha, n: int) -> DigitWord:
    base = numeration_base(alpha)
    if n >= 0:
        return psi_inv(base.alpha, n)
    if base.is_rational and -n >= base.denominator:
        raise OutOfRange(f"n = {n} is outside ]-{base.denominator}, {base.denominator}[")
    return cfe_complement(base.alpha, psi_inv(base.alpha, -n))


def signed_range(alpha) -> range:
    """Integers codable over a rational alpha"""
    base = numeration_base(alpha)
    if not base.is_rational:
        raise DomainError(f"every integer is codable over irrational {base.alpha}")
    return range(-base.denominator + 1, base.denominator)
