"""
Numeration Toolkit - Shift Structure

How the alpha-numeration behaves under the Gauss shift alpha -> T(alpha):
the shifted parameters alpha_k, the shifted integers nu_k and reals gamma_k
carried by the tails of their digit words, the first-digit blocks of E_alpha,
and the resulting decomposition of K_alpha = {{k alpha} : k >= 0}.

Key Features:
- shift_alpha / shift_integer / shift_real with their digit characterisations
- First-digit blocks E_(alpha,k), E'_(alpha,a1) and the block shift maps
- Exact-set check of the K_alpha decomposition (finite for rational alpha,
  truncated by word length for irrational alpha)
"""

from dataclasses import dataclass, field
from typing import List, Optional, Set

import structlog

from src.errors.error_handling_system import DomainError, IndexBeyondDepth, NonTerminatingStream
from src.exact_numbers.exact_real import ZERO, ExactReal, frac
from src.numeration.digit_word import DigitWord, Tail, numeration_base
from src.numeration.numeration import (
    as_word,
    is_admissible,
    lambda_stream,
    lambda_value,
    psi,
    psi_inv,
    word_count
)

logger = structlog.get_logger().bind(component="shift")


def _check_depth(base, k: int, slack: int, operation: str):
    if k < 0:
        raise DomainError(f"{operation} needs k >= 0, got {k}")
    if base.is_rational and k > base.depth - slack:
        raise IndexBeyondDepth(
            f"{operation} index {k} exceeds depth {base.depth} - {slack} of alpha = {base.alpha}"
        )


def shift_alpha(alpha, k: int) -> ExactReal:
    """alpha_k = {1/alpha_(k-1)} = [0, a_(k+1), a_(k+2), ...]"""
    base = numeration_base(alpha)
    _check_depth(base, k, 0, "shift_alpha")
    x = base.alpha
    for _ in range(k):
        x = frac(x.reciprocal())
    return x


def shifted_word(alpha, w: DigitWord, k: int) -> DigitWord:
    """
    The word read off the tail of w over alpha_k: sigma^k(w) when
    d_(k+1) != 0 or sigma^k(w) = 0, else (1, sigma^(k+1)(w)).
    """
    alpha_k = shift_alpha(alpha, k)
    rest = w.digits[k:]
    if not any(rest) or rest[0] != 0:
        return DigitWord(alpha_k, rest)
    return DigitWord(alpha_k, (1,) + rest[1:])


def shift_integer(alpha, nu: int, k: int) -> int:
    """
    nu_k = floor(nu_(k-1) alpha_(k-1)), plus 1 when n_(k+1) = 0 and
    sigma^k(n) != 0, where n = Psi^-1(nu).
    """
    base = numeration_base(alpha)
    _check_depth(base, k, 2, "shift_integer")
    n = psi_inv(base.alpha, nu)
    value = nu
    x = base.alpha
    for j in range(1, k + 1):
        value = (x * value).floor()
        if n.digit(j + 1) == 0 and any(n.digits[j:]):
            value += 1
        x = frac(x.reciprocal())
    check = psi(shift_alpha(base.alpha, k), shifted_word(base.alpha, n, k))
    if check != value:
        logger.warning("shift_integer_mismatch", alpha=str(base.alpha), nu=nu, k=k,
                       recurrence=value, digits=check)
    return value


def shift_real(alpha, beta, k: int) -> ExactReal:
    """gamma_0 = beta, gamma_k = b_k - gamma_(k-1) / alpha_(k-1) with b the Lambda digits of beta"""
    base = numeration_base(alpha)
    _check_depth(base, k, 2, "shift_real")
    stream = lambda_stream(base.alpha, beta)
    gamma = stream.beta
    x = base.alpha
    for j in range(1, k + 1):
        gamma = stream.digit(j) - gamma / x
        x = frac(x.reciprocal())
    return gamma


@dataclass(frozen=True)
class ShiftedReal:
    """gamma_k with the word of its digit characterisation"""
    gamma: ExactReal
    case: int
    word: Optional[DigitWord]
    word_value: Optional[ExactReal]


def shift_real_case(alpha, beta, k: int) -> ShiftedReal:
    """
    Case 1 (b_(k+1) != 0 or sigma^k(b) = 0): gamma_k = Lambda_(alpha_k)(sigma^k(b)).
    Case 2: gamma_k < 0 and gamma_(k+1) = Lambda_(alpha_(k+1))(sigma^(k+1)(b)).
    The word is None when the digits of beta do not terminate.
    """
    base = numeration_base(alpha)
    gamma = shift_real(base.alpha, beta, k)
    stream = lambda_stream(base.alpha, beta)
    try:
        digits = stream.to_word().digits
    except NonTerminatingStream:
        digits = None

    if digits is None:
        case = 1 if stream.digit(k + 1) != 0 else 2
        return ShiftedReal(gamma, case, None, None)

    rest = digits[k:]
    if not any(rest) or rest[0] != 0:
        word = DigitWord(shift_alpha(base.alpha, k), rest)
        return ShiftedReal(gamma, 1, word, lambda_value(word.alpha, word))
    word = DigitWord(shift_alpha(base.alpha, k + 1), rest[1:])
    return ShiftedReal(gamma, 2, word, lambda_value(word.alpha, word))


@dataclass(frozen=True)
class DigitBlock:
    """E_(alpha,k) for first digit k, or E'_(alpha,a1) when primed"""
    first_digit: int
    primed: bool = False

    def __str__(self):
        return f"E'_{self.first_digit}" if self.primed else f"E_{self.first_digit}"


def first_digit_block(alpha, w) -> DigitBlock:
    base = numeration_base(alpha)
    w = as_word(base.alpha, w)
    if w.tail is not Tail.ZEROS or not is_admissible(base.alpha, w):
        raise DomainError(f"{w} is not an admissible zeros-tail word over {base.alpha}")
    d1 = w.digit(1)
    if d1 < base.a(1):
        return DigitBlock(d1)
    if w.digit(2) != 0 or not any(w.digits[1:]):
        return DigitBlock(d1)
    return DigitBlock(d1, primed=True)


def shift_block_word(alpha, w) -> DigitWord:
    """sigma(w) over T(alpha) on E_(alpha,k), k >= 1; sigma^2(w) over T^2(alpha) on E'_(alpha,a1)"""
    base = numeration_base(alpha)
    w = as_word(base.alpha, w)
    block = first_digit_block(base.alpha, w)
    if block.first_digit == 0:
        raise DomainError("the block E_(alpha,0) holds only the zero word")
    if block.primed:
        return DigitWord(shift_alpha(base.alpha, 2), w.digits[2:])
    return DigitWord(shift_alpha(base.alpha, 1), w.digits[1:])


def _orbit_points(x: ExactReal, count: int) -> Set[ExactReal]:
    return {frac(x * k) for k in range(count)}


def _truncated_orbit(alpha: ExactReal, length: Optional[int]) -> Set[ExactReal]:
    """{{k alpha}} over the integers coded by words of length <= length"""
    if alpha.sign() == 0:
        return {ZERO}
    if length is not None and length < 0:
        return set()
    return _orbit_points(alpha, word_count(alpha, length))


@dataclass
class KAlphaReport:
    alpha: ExactReal
    depth: Optional[int]
    equal: bool
    disjoint: bool
    size: int
    piece_sizes: List[int] = field(default_factory=list)

    def __bool__(self):
        return self.equal and self.disjoint


def k_alpha_decomposition_check(alpha, depth: int = None) -> KAlphaReport:
    """
    Compare K_alpha with alpha ({0} u U_j (j - K_T(alpha)) u (a1 + T(alpha) (K_T2(alpha) - {0}))).
    Irrational alpha uses words of length <= depth on the left and the
    matching lengths depth - 1 and depth - 2 on the right.
    """
    base = numeration_base(alpha)
    x = base.alpha
    if x.sign() == 0:
        raise DomainError("K_alpha decomposition needs alpha > 0")
    if base.is_rational:
        depth = None
    elif depth is None or depth < 1:
        raise DomainError("irrational alpha needs a truncation depth >= 1")

    def shorter(by: int) -> Optional[int]:
        return None if depth is None else depth - by

    t1 = shift_alpha(x, 1)
    a1 = base.a(1)
    k_t1 = _truncated_orbit(t1, shorter(1))
    pieces: List[Set[ExactReal]] = [{ZERO}]
    for j in range(1, a1 + 1):
        pieces.append({x * (j - y) for y in k_t1})
    if t1.sign() == 0:
        pieces.append(set())
    else:
        t2 = frac(t1.reciprocal())
        k_t2 = _truncated_orbit(t2, shorter(2)) - {ZERO}
        pieces.append({x * (t1 * y + a1) for y in k_t2})

    union: Set[ExactReal] = set().union(*pieces)
    target = _truncated_orbit(x, depth)
    sizes = [len(piece) for piece in pieces]
    report = KAlphaReport(
        alpha=x,
        depth=depth,
        equal=union == target,
        disjoint=sum(sizes) == len(union),
        size=len(target),
        piece_sizes=sizes
    )
    logger.debug("k_alpha_checked", alpha=str(x), depth=depth, equal=report.equal,
                 disjoint=report.disjoint, size=report.size)
    return report
