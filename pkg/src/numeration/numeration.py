"""
Numeration Toolkit - Alpha-Numeration Maps

The variant Ostrowski numeration attached to alpha in [0, 1[: integers are
coded by Psi (digit weights q_{j-1}, reversed lexicographic order) and reals of
[0, 1[ by Lambda (digit weights (-1)^(j-1) delta_{j-1}, alternate order), with
the fundamental identity {n alpha} = Lambda(Psi^-1(n)).

Key Features:
- Admissibility test for the variant Markov condition
- Greedy top-down Psi^-1 and exact Lambda^-1 digit streams
- Epsilon extension Lambda~ for rational alpha off the 1/q grid
- Reflection of digits under alpha -> 1 - alpha
"""

import threading
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import structlog

from src.config.settings import settings
from src.errors.error_handling_system import (
    DomainError,
    IndexBeyondDepth,
    NonTerminatingStream,
    NotAdmissible,
    NotGridPoint,
    OutOfRange
)
from src.exact_numbers.exact_real import ZERO, ExactReal, as_exact
from .digit_word import DigitWord, Tail, numeration_base, position_exists

logger = structlog.get_logger().bind(component="numeration")


def as_word(alpha, w) -> DigitWord:
    """Accept a DigitWord over alpha or a plain digit sequence (zeros tail)"""
    alpha = as_exact(alpha)
    if isinstance(w, DigitWord):
        if w.alpha != alpha:
            raise DomainError(f"word over {w.alpha} used with alpha = {alpha}")
        return w
    return DigitWord(alpha, tuple(w))


def is_admissible(alpha, w) -> bool:
    """d_j <= a_j, and d_j = 0 forces later zeros or d_(j-1) = a_(j-1)"""
    base = numeration_base(alpha)
    w = as_word(alpha, w)
    digits = w.digits
    if base.is_rational and len(digits) > base.depth:
        return False
    tail_is_empty = w.tail is Tail.ZEROS or (base.is_rational and len(digits) >= base.depth)
    if w.tail is Tail.MAXES and tail_is_empty and not any(digits):
        # the all-zero vector codes -q_(r+1), outside the signed range
        return False
    for j, d in enumerate(digits, start=1):
        if d < 0 or d > base.a(j):
            return False
        if d == 0:
            later_zero = tail_is_empty and not any(digits[j:])
            previous_max = j >= 2 and digits[j - 2] == base.a(j - 1)
            if not (later_zero or previous_max):
                return False
    return True


def _require_admissible(alpha, w) -> DigitWord:
    w = as_word(alpha, w)
    if not is_admissible(alpha, w):
        raise NotAdmissible(f"{w} is not admissible for alpha = {w.alpha}")
    return w


def linear_value(alpha, digits, tail: Tail = Tail.ZEROS) -> ExactReal:
    """
    Sum of d_k delta'_(k-1) over the explicit digits, plus the maxes tail in
    closed form: sum_(k>R) a_k delta'_(k-1) = -delta'_R - delta'_(R-1).
    With delta'_k = q_k alpha - p_k the sum is Q alpha - P for integers Q, P.
    """
    base = numeration_base(alpha)
    big_q = big_p = 0
    for k, d in enumerate(digits, start=1):
        if d:
            if base.is_rational and k - 1 > base.depth:
                raise IndexBeyondDepth(f"delta index {k - 1} beyond depth {base.depth} of {base.alpha}")
            big_q += d * base.q(k - 1)
            big_p += d * base.p(k - 1)
    if tail is Tail.MAXES:
        r = len(digits)
        if not base.is_rational or r < base.depth:
            big_q -= base.q(r) + base.q(r - 1)
            big_p -= base.p(r) + base.p(r - 1)
    return base.alpha * big_q - big_p


def psi(alpha, w) -> int:
    """Psi(d) = sum d_j q_(j-1) on zeros-tail words"""
    w = _require_admissible(alpha, w)
    if w.tail is not Tail.ZEROS:
        raise DomainError("psi codes zeros-tail words; use psi_signed for maxes tails")
    base = w.base
    return sum(d * base.q(j - 1) for j, d in enumerate(w.digits, start=1))


def psi_inv(alpha, n: int) -> DigitWord:
    """Greedy top-down expansion of a non-negative integer"""
    base = numeration_base(alpha)
    if n < 0:
        raise DomainError(f"psi_inv needs n >= 0, got {n}; use psi_signed_inv")
    if base.is_rational and n >= base.denominator:
        raise OutOfRange(f"n = {n} is outside [0, {base.denominator - 1}] for alpha = {base.alpha}")

    k = 0
    while n >= base.q(k) + base.q(k - 1):
        k += 1
    digits = [0] * k
    remaining = n
    for j in range(k, 0, -1):
        d = max(0, (remaining - base.q(j - 2)) // base.q(j - 1))
        digits[j - 1] = d
        remaining -= d * base.q(j - 1)
    if remaining != 0:
        raise NotAdmissible(f"greedy expansion of {n} left remainder {remaining}")
    return DigitWord(base.alpha, tuple(digits))


def lambda_value(alpha, w) -> ExactReal:
    """Lambda(d) = sum d_j (-1)^(j-1) delta_(j-1)"""
    w = _require_admissible(alpha, w)
    return linear_value(w.alpha, w.digits, w.tail)


class DigitStream:
    """
    Lazy Lambda^-1 digits of beta: b_k = min(a_k, ceil(beta_(k-1)/delta_(k-1))),
    beta_k = b_k delta_(k-1) - beta_(k-1). The stream ends when a remainder is 0.
    """

    def __init__(self, alpha, beta):
        self.base = numeration_base(alpha)
        self.alpha = self.base.alpha
        self.beta = as_exact(beta)
        self._digits: List[int] = []
        self._remainders: List[ExactReal] = [self.beta]
        self._lock = threading.Lock()

    @property
    def terminated(self) -> bool:
        return self._remainders[-1].sign() == 0

    def _advance(self, count: int):
        with self._lock:
            while len(self._digits) < count and not self.terminated:
                k = len(self._digits) + 1
                if not position_exists(self.base, k):
                    raise NonTerminatingStream(
                        f"remainder {self._remainders[-1]} left after depth {self.base.depth}"
                    )
                previous = self._remainders[-1]
                weight = self.base.delta(k - 1)
                b = min(self.base.a(k), (previous / weight).ceil())
                self._digits.append(b)
                self._remainders.append(weight * b - previous)

    def digit(self, k: int) -> int:
        self._advance(k)
        return self._digits[k - 1] if k <= len(self._digits) else 0

    def take(self, count: int) -> List[int]:
        return [self.digit(j) for j in range(1, count + 1)]

    def remainder(self, k: int) -> ExactReal:
        """The exact beta_k"""
        self._advance(k)
        return self._remainders[k] if k < len(self._remainders) else ZERO

    def horizon(self) -> Optional[int]:
        """Number of digits when the stream has ended, else None"""
        return len(self._digits) + 1 if self.terminated else None

    def prefix_value(self, k: int) -> ExactReal:
        return linear_value(self.alpha, self.take(k))

    def enclosure(self, k: int) -> Tuple[ExactReal, ExactReal]:
        """Open interval around beta known from the first k digits"""
        value = self.prefix_value(k)
        if k % 2 == 0:
            return value - self.base.delta(k), value + self.base.delta(k - 1)
        return value - self.base.delta(k - 1), value + self.base.delta(k)

    def to_word(self, limit: int = None) -> DigitWord:
        limit = limit or settings.stream.max_digits
        self._advance(limit)
        if not self.terminated:
            raise NonTerminatingStream(f"digits of {self.beta} do not end within {limit} digits")
        return DigitWord(self.alpha, tuple(self._digits))

    def __iter__(self) -> Iterator[int]:
        k = 1
        while True:
            self._advance(k)
            if k > len(self._digits):
                return
            yield self._digits[k - 1]
            k += 1


def _check_unit(beta) -> ExactReal:
    beta = as_exact(beta)
    if beta.sign() < 0 or beta >= 1:
        raise DomainError(f"beta must lie in [0, 1[, got {beta}")
    return beta


def lambda_stream(alpha, beta) -> DigitStream:
    base = numeration_base(alpha)
    beta = _check_unit(beta)
    if base.is_rational:
        scaled = beta * base.denominator
        if not scaled.is_integer:
            raise NotGridPoint(
                f"{beta} is not a multiple of 1/{base.denominator}; lambda_tilde_inv "
                f"(encode --real on the command line) splits it into a grid word and eps"
            )
    return DigitStream(base.alpha, beta)


def lambda_inv(alpha, beta, limit: int = None) -> DigitWord:
    """Lambda^-1 for terminating expansions (rational alpha, or beta = {n alpha})"""
    return lambda_stream(alpha, beta).to_word(limit)


def _rational_base(alpha):
    base = numeration_base(alpha)
    if not base.is_rational:
        raise DomainError(f"the epsilon extension needs rational alpha, got {base.alpha}")
    return base


def lambda_tilde(alpha, w, eps) -> ExactReal:
    """Lambda(w) + eps * delta_r on E_alpha x [0, 1["""
    base = _rational_base(alpha)
    eps = _check_unit(eps)
    return lambda_value(alpha, w) + eps * base.delta(base.depth)


def lambda_tilde_inv(alpha, beta) -> Tuple[DigitWord, ExactReal]:
    """(w, eps) with eps = {q_(r+1) beta} and w coding the grid point below beta"""
    base = _rational_base(alpha)
    beta = _check_unit(beta)
    q = base.denominator
    scaled = beta * q
    grid = scaled.floor()
    return lambda_inv(alpha, Fraction(grid, q)), scaled - grid


def reflect(alpha, w) -> DigitWord:
    """Digits (1, b_1 - 1, b_2, ...) of 1 - beta under the base 1 - alpha"""
    base = numeration_base(alpha)
    if not (base.alpha.sign() > 0 and base.alpha * 2 < 1):
        raise DomainError(f"reflection needs 0 < alpha < 1/2, got {base.alpha}")
    w = _require_admissible(alpha, w)
    if w.tail is not Tail.ZEROS or w.is_zero:
        raise DomainError("reflection needs a nonzero zeros-tail word")
    digits = (1, w.digits[0] - 1) + w.digits[1:]
    return DigitWord(1 - base.alpha, digits)


def word_count(alpha, length: int = None) -> int:
    """Number of admissible zeros-tail words of length <= length"""
    base = numeration_base(alpha)
    if base.is_rational and (length is None or length >= base.depth):
        return base.denominator
    if length is None:
        raise DomainError("irrational alpha needs an explicit word length")
    return base.q(length) + base.q(length - 1)


def enumerate_words(alpha, length: int = None) -> Iterator[DigitWord]:
    """Admissible zeros-tail words in RLO order"""
    for n in range(word_count(alpha, length)):
        yield psi_inv(alpha, n)
