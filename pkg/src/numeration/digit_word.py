"""
Numeration Toolkit - Digit Words

Finitely described digit sequences of the alpha-numeration: an explicit
prefix d_1..d_s followed by a tail of zeros (codes of non-negative integers)
or of maximal digits a_k (codes of negative integers).

Key Features:
- Immutable DigitWord with canonical trailing-digit stripping
- Text form "(d1,d2,...)|0" / "(d1,...)|max" and a JSON array form
- Reversed (RLO) and alternate (ALO) lexicographic comparison
"""

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from src.cfe.cfe_core import AlphaBase, base_of
from src.config.settings import settings
from src.errors.error_handling_system import (
    DomainError,
    ExpressionParseError,
    IncomparableStreams,
    NonTerminatingStream
)
from src.exact_numbers.exact_real import ExactReal, as_exact


class Tail(Enum):
    """What follows the explicit digits of a word"""
    ZEROS = "0"
    MAXES = "max"


def numeration_base(alpha) -> AlphaBase:
    """AlphaBase of a numeration parameter, which must lie in [0, 1["""
    base = base_of(alpha)
    if not base.in_unit_interval:
        raise DomainError(f"numeration needs 0 <= alpha < 1, got {base.alpha}")
    return base


def position_exists(base: AlphaBase, j: int) -> bool:
    """Digit positions are 1..r for rational alpha of depth r, unbounded otherwise"""
    return j >= 1 and (not base.is_rational or j <= base.depth)


@dataclass(frozen=True)
class DigitWord:
    """
    Digit word over alpha. Digits may be any integers so that intermediate
    sequences of the complement conversion fit the same type; admissibility
    is checked by numeration.is_admissible.
    """
    alpha: ExactReal
    digits: Tuple[int, ...] = ()
    tail: Tail = Tail.ZEROS

    def __post_init__(self):
        alpha = as_exact(self.alpha)
        base = numeration_base(alpha)
        digits = [int(d) for d in self.digits]
        if self.tail is Tail.ZEROS:
            while digits and digits[-1] == 0:
                digits.pop()
        else:
            while digits and position_exists(base, len(digits)) and digits[-1] == base.a(len(digits)):
                digits.pop()
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'digits', tuple(digits))

    @property
    def base(self) -> AlphaBase:
        return base_of(self.alpha)

    @property
    def is_zero(self) -> bool:
        return self.tail is Tail.ZEROS and not self.digits

    def __len__(self) -> int:
        return len(self.digits)

    def digit(self, j: int) -> int:
        """d_j for j >= 1, tail digits included"""
        if j < 1:
            raise DomainError(f"digit positions start at 1, got {j}")
        if j <= len(self.digits):
            return self.digits[j - 1]
        if self.tail is Tail.MAXES and position_exists(self.base, j):
            return self.base.a(j)
        return 0

    def prefix(self, k: int) -> List[int]:
        return [self.digit(j) for j in range(1, k + 1)]

    def with_digits(self, digits, tail: Tail = None) -> "DigitWord":
        return DigitWord(self.alpha, tuple(digits), tail or self.tail)

    def __str__(self):
        return format_word(self)


def format_word(w: DigitWord) -> str:
    return "(" + ",".join(str(d) for d in w.digits) + ")|" + w.tail.value


def word_to_json(w: DigitWord) -> dict:
    return {"digits": list(w.digits), "tail": w.tail.value}


_WORD_TEXT = re.compile(r"^\s*\(([^)]*)\)(?:_[^|\s]*)?\s*(?:\|\s*(0|max))?\s*$")


def parse_word(alpha, text: str) -> DigitWord:
    """Parse "(1,0,2)|0", "(1,1)|max" or a JSON array "[1,0,2]" (zeros tail)"""
    text = text.strip()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as e:
            raise ExpressionParseError(f"bad digit array '{text}': {e}")
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise ExpressionParseError(f"digit array must hold integers: '{text}'")
        return DigitWord(alpha, tuple(values))
    match = _WORD_TEXT.match(text)
    if match is None:
        raise ExpressionParseError(f"not a digit word: '{text}'")
    body, tail = match.groups()
    parts = [part.strip() for part in body.split(",") if part.strip()]
    try:
        digits = tuple(int(part) for part in parts)
    except ValueError:
        raise ExpressionParseError(f"digit word holds a non-integer: '{text}'")
    return DigitWord(alpha, digits, Tail(tail) if tail else Tail.ZEROS)


def _settle(x) -> DigitWord:
    if isinstance(x, DigitWord):
        return x
    try:
        return x.to_word()
    except NonTerminatingStream:
        raise IncomparableStreams("RLO cannot compare a non-terminating digit stream")


def _same_alpha(x, y):
    if as_exact(x.alpha) != as_exact(y.alpha):
        raise DomainError(f"words over different bases: {x.alpha} and {y.alpha}")


def compare_rlo(w1, w2) -> int:
    """
    Reversed lexicographic order: the highest differing index decides.
    A maxes-tail word precedes every zeros-tail word.
    """
    _same_alpha(w1, w2)
    w1, w2 = _settle(w1), _settle(w2)
    if w1.tail is not w2.tail:
        return -1 if w1.tail is Tail.MAXES else 1
    for j in range(max(len(w1), len(w2)), 0, -1):
        d1, d2 = w1.digit(j), w2.digit(j)
        if d1 != d2:
            return -1 if d1 < d2 else 1
    return 0


def _known_horizon(x):
    if isinstance(x, DigitWord):
        return len(x) + 1
    return x.horizon()


def compare_alo(w1, w2, limit: int = None) -> int:
    """Alternate lexicographic order: first differing d_j, weighted by (-1)^(j-1)"""
    _same_alpha(w1, w2)
    limit = limit or settings.stream.max_digits
    for j in range(1, limit + 1):
        d1, d2 = w1.digit(j), w2.digit(j)
        if d1 != d2:
            bigger = 1 if d1 > d2 else -1
            return bigger if j % 2 == 1 else -bigger
        h1, h2 = _known_horizon(w1), _known_horizon(w2)
        if h1 is not None and h2 is not None and j >= max(h1, h2):
            return 0
    raise IncomparableStreams(f"digit streams agree on the first {limit} digits")
