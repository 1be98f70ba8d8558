"""
Numeration Toolkit - Germ Classes

The rotation x -> {x + alpha} read in digit space. Two digit sequences share
a germ when they agree from some index on; inside each class the rotation is
the RLO successor, computed by a carry: find the least r with b_r < a_r and
replace b_1..b_r by the successor of the truncated word (b_1, ..., b_r).

Key Features:
- germ_successor on zeros-tail words, maxes-tail words and digit streams
- GermElement: a rewritten prefix in front of an untouched stream
- same_germ for words sharing a tail and for stream-based elements
"""

from dataclasses import dataclass
from typing import Tuple, Union

import structlog

from src.config.settings import settings
from src.errors.error_handling_system import DomainError, NoSuccessor
from src.exact_numbers.exact_real import ExactReal
from src.numeration.digit_word import DigitWord, Tail, numeration_base, position_exists
from src.numeration.numeration import DigitStream, as_word, is_admissible, linear_value, psi, psi_inv

logger = structlog.get_logger().bind(component="germs")


@dataclass(frozen=True)
class GermElement:
    """`prefix` followed by the digits of `source` from position len(prefix) + 1 on"""
    prefix: Tuple[int, ...]
    source: DigitStream

    @property
    def alpha(self) -> ExactReal:
        return self.source.alpha

    def digit(self, j: int) -> int:
        if j <= len(self.prefix):
            return self.prefix[j - 1]
        return self.source.digit(j)

    def value(self) -> ExactReal:
        """Only the prefix differs from the source, so the value is exact"""
        original = self.source.take(len(self.prefix))
        return (self.source.beta
                + linear_value(self.alpha, self.prefix)
                - linear_value(self.alpha, original))


Germ = Union[DigitWord, DigitStream, GermElement]


def _carry_index(base, element: Germ) -> int:
    limit = settings.stream.max_digits
    for r in range(1, limit + 1):
        if not position_exists(base, r):
            break
        if element.digit(r) < base.a(r):
            return r
    raise NoSuccessor(f"digits equal a_k on every checked position; no successor in the germ class")


def _successor_prefix(base, prefix) -> Tuple[int, ...]:
    r = len(prefix)
    following = psi_inv(base.alpha, psi(base.alpha, DigitWord(base.alpha, tuple(prefix))) + 1)
    if len(following) > r:
        raise NoSuccessor(f"successor of {tuple(prefix)} needs more than {r} digits")
    return tuple(following.digits) + (0,) * (r - len(following))


def germ_successor(alpha, w: Germ) -> Germ:
    """The RLO successor of w inside its germ class"""
    base = numeration_base(alpha)
    if isinstance(w, (DigitStream, GermElement)):
        if w.alpha != base.alpha:
            raise DomainError(f"element over {w.alpha} used with alpha = {base.alpha}")
    else:
        w = as_word(base.alpha, w)
        if not is_admissible(base.alpha, w):
            raise DomainError(f"{w} is not admissible for alpha = {base.alpha}")

    r = _carry_index(base, w)
    head = _successor_prefix(base, [w.digit(j) for j in range(1, r + 1)])

    if isinstance(w, DigitWord):
        rest = w.digits[r:]
        result = DigitWord(base.alpha, head + rest, w.tail)
    elif isinstance(w, GermElement):
        result = GermElement(head + w.prefix[r:], w.source)
    else:
        result = GermElement(head, w)
    logger.debug("germ_successor", alpha=str(base.alpha), carry_index=r, prefix=list(head))
    return result


def germ_value(alpha, element: Germ) -> ExactReal:
    if isinstance(element, GermElement):
        return element.value()
    if isinstance(element, DigitStream):
        return element.beta
    w = as_word(alpha, element)
    return linear_value(w.alpha, w.digits, w.tail)


def _in_z_plus_alpha_z(alpha: ExactReal, x: ExactReal) -> bool:
    """x = m + n alpha for integers m, n"""
    if alpha.is_rational or x.is_rational:
        if x.is_rational:
            return x.is_integer
        return False
    if x.d != alpha.d:
        return False
    n = x.b / alpha.b
    if n.denominator != 1:
        return False
    m = x.a - n * alpha.a
    return m.denominator == 1


def same_germ(alpha, x: Germ, y: Germ) -> bool:
    """
    Words: equal tails. Elements built on one stream: always. Otherwise the
    values differ by an element of Z + alpha Z.
    """
    base = numeration_base(alpha)
    if isinstance(x, DigitWord) and isinstance(y, DigitWord):
        return x.tail is y.tail
    if isinstance(x, DigitWord) or isinstance(y, DigitWord):
        return False

    def source_of(e):
        return e.source if isinstance(e, GermElement) else e

    if source_of(x) is source_of(y):
        return True
    if base.is_rational:
        return germ_value(base.alpha, x) == germ_value(base.alpha, y)
    return _in_z_plus_alpha_z(base.alpha, germ_value(base.alpha, x) - germ_value(base.alpha, y))
