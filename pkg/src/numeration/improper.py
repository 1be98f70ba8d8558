"""
Improper expansions: digit sequences ending in the forbidden (max, 0)
repetition. Their value coincides with the value of a proper word, which
normalize_improper recovers.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import structlog

from src.errors.error_handling_system import DomainError, NonTerminatingStream, NotConvertible
from src.exact_numbers.exact_real import ZERO, ExactReal
from .digit_word import DigitWord, Tail, numeration_base, position_exists
from .numeration import is_admissible, lambda_inv, linear_value

logger = structlog.get_logger().bind(component="improper")


@dataclass(frozen=True)
class ImproperExpansion:
    """prefix (positions 1..start-1, zero padded) then a_start, 0, a_(start+2), 0, ..."""
    prefix: Tuple[int, ...]
    start: int

    def __post_init__(self):
        if self.start < 1:
            raise DomainError(f"pattern start must be >= 1, got {self.start}")
        if len(self.prefix) > self.start - 1:
            raise DomainError(f"prefix of length {len(self.prefix)} overlaps the pattern at {self.start}")
        object.__setattr__(self, 'prefix', tuple(int(d) for d in self.prefix))


def improper_value(alpha, expansion: ImproperExpansion) -> ExactReal:
    base = numeration_base(alpha)
    s = expansion.start
    if base.is_rational:
        pattern = list(expansion.prefix) + [0] * (s - 1 - len(expansion.prefix))
        k = s
        while position_exists(base, k):
            pattern.append(base.a(k) if (k - s) % 2 == 0 else 0)
            k += 1
        return linear_value(base.alpha, pattern)
    # a_k delta'_(k-1) = delta'_k - delta'_(k-2) telescopes to -delta'_(s-2)
    return linear_value(base.alpha, expansion.prefix) - base.delta_prime(s - 2)


def normalize_improper(alpha, seq: Union[ImproperExpansion, DigitWord]) -> DigitWord:
    """The proper zeros-tail word with the same value, taken on the circle R/Z"""
    base = numeration_base(alpha)
    if isinstance(seq, DigitWord):
        if seq.tail is Tail.ZEROS and is_admissible(base.alpha, seq):
            return seq
        raise NotConvertible(f"{seq} is neither proper nor an improper expansion")

    value = improper_value(base.alpha, seq)
    if value.sign() < 0 or value > 1:
        raise NotConvertible(f"improper expansion has value {value} outside [0, 1]")
    if value == 1:
        # 1 and 0 are the same point of the circle
        value = ZERO
    try:
        word = lambda_inv(base.alpha, value, limit=None if base.is_rational else seq.start + 2)
    except NonTerminatingStream:
        raise NotConvertible(f"value {value} has no terminating proper expansion")
    logger.debug("improper_normalized", start=seq.start, prefix=list(seq.prefix), word=str(word))
    return word
