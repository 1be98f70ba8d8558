"""
Numeration Toolkit - Continued Fraction Core

Continued-fraction expansions with the trailing-[..., 1] convention for
rationals: a rational x = [a0, ..., a_r, 1] has CFE-depth r, and the digit
after the final 1 is INFINITY. Expansion uses the extended Gauss-map pair
(A1, T1), so the same code handles rationals and quadratic irrationals.

Key Features:
- CfeStream: lazy, memoized, thread-safe digit source
- AlphaBase: cached per-alpha table of digits, convergents p_k/q_k and delta_k
- Semi-convergents, best rational in an interval, best one-sided rational approximations
- Shifted alternate-lexicographic comparison of CFE digit lists
"""

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple, Union

import structlog

from src.config.settings import settings
from src.errors.error_handling_system import (
    DomainError,
    EmptyInput,
    EqualEndpoints,
    ExpressionParseError,
    IncomparableStreams,
    IndexBeyondDepth,
    NonTerminatingStream
)
from src.exact_numbers.exact_real import (
    INFINITY,
    ExactReal,
    ExtendedDigit,
    as_exact,
    gauss_a1,
    gauss_t1
)

logger = structlog.get_logger().bind(component="cfe_core")

Depth = Union[int, type(INFINITY)]


class CfeStream:
    """
    Digit source [t0, t1, t2, ...] of an exact real.

    t0 = I(x); t_k = A1(T1^(k-1)(x - t0)). Digits are produced on demand and
    memoized; requests from several threads are serialized by a lock.
    """

    def __init__(self, x):
        self.x = as_exact(x)
        self.t0 = self.x.ceil_minus_one()
        self._state = self.x - self.t0
        self._digits: List[int] = [self.t0]
        self._finished = False
        self._lock = threading.Lock()

    def _extend(self, count: int):
        with self._lock:
            while len(self._digits) < count and not self._finished:
                digit = gauss_a1(self._state)
                if digit is INFINITY:
                    self._finished = True
                    break
                self._digits.append(digit)
                self._state = gauss_t1(self._state)

    def digit(self, k: int) -> ExtendedDigit:
        """t_k, or INFINITY past the end of a rational expansion"""
        if k < 0:
            raise DomainError(f"digit index must be >= 0, got {k}")
        self._extend(k + 1)
        if k < len(self._digits):
            return self._digits[k]
        return INFINITY

    def take(self, count: int) -> List[int]:
        """Up to ``count`` leading digits (fewer when a rational expansion ends)"""
        self._extend(count)
        return list(self._digits[:count])

    @property
    def is_finite(self) -> bool:
        return self.x.is_rational

    def finite_digits(self) -> List[int]:
        """The complete digit list of a rational"""
        if not self.is_finite:
            raise DomainError(f"{self.x} has an infinite expansion")
        while not self._finished:
            self._extend(len(self._digits) + 64)
        return list(self._digits)

    def __iter__(self):
        k = 0
        while True:
            t = self.digit(k)
            if t is INFINITY:
                return
            yield t
            k += 1

    def __getitem__(self, k: int) -> ExtendedDigit:
        return self.digit(k)


def cfe_of(x) -> CfeStream:
    return CfeStream(x)


def cfe_value(digits: Sequence[ExtendedDigit]) -> ExactReal:
    """Evaluate [t0, t1, ..., tn] exactly by backward recursion"""
    if len(digits) == 0:
        raise EmptyInput("cannot evaluate an empty continued fraction")
    for k, t in enumerate(digits[1:], start=1):
        if t is not INFINITY and t < 1:
            raise DomainError(f"digit t_{k} = {t} must be >= 1")
    head = list(digits)
    while len(head) > 1 and head[-1] is INFINITY:
        head.pop()
    if head[0] is INFINITY:
        raise DomainError("t0 cannot be infinite")
    value = Fraction(head[-1])
    for t in reversed(head[:-1]):
        value = t + 1 / value
    return ExactReal(value)


def mu_depth(x) -> Depth:
    """CFE-depth: r for x = [a0, ..., a_r, 1], INFINITY for irrationals"""
    x = as_exact(x)
    if not x.is_rational:
        return INFINITY
    return len(CfeStream(x).finite_digits()) - 2


class AlphaBase:
    """
    Cached numeration data of one real alpha.

    a(k) are the CFE digits, p(k)/q(k) the convergents from k = -2 and
    delta(k) = (-1)^k (q_k alpha - p_k) from k = -2 (delta_-2 = alpha,
    delta_-1 = 1). For rational alpha of depth r convergents stop at r+1
    and deltas at r.
    """

    def __init__(self, alpha):
        self.alpha = as_exact(alpha)
        self.stream = CfeStream(self.alpha)
        self.depth: Depth = mu_depth(self.alpha)
        self._p: List[int] = [0, 1]
        self._q: List[int] = [1, 0]
        self._delta_primes: Dict[int, ExactReal] = {}
        self._lock = threading.Lock()

    @property
    def is_rational(self) -> bool:
        return self.alpha.is_rational

    @property
    def denominator(self) -> int:
        """q_{r+1}, the reduced denominator of a rational alpha"""
        if not self.is_rational:
            raise DomainError(f"{self.alpha} is irrational")
        return self.alpha.as_fraction().denominator

    def a(self, k: int) -> ExtendedDigit:
        return self.stream.digit(k)

    def _check_convergent_index(self, k: int):
        if k < -2:
            raise DomainError(f"convergent index must be >= -2, got {k}")
        if self.is_rational and k > self.depth + 1:
            raise IndexBeyondDepth(f"index {k} beyond depth {self.depth} of {self.alpha}")

    def _extend(self, k: int):
        with self._lock:
            while len(self._p) < k + 3:
                j = len(self._p) - 2
                a_j = self.a(j)
                self._p.append(a_j * self._p[-1] + self._p[-2])
                self._q.append(a_j * self._q[-1] + self._q[-2])

    def p(self, k: int) -> int:
        self._check_convergent_index(k)
        self._extend(k)
        return self._p[k + 2]

    def q(self, k: int) -> int:
        self._check_convergent_index(k)
        self._extend(k)
        return self._q[k + 2]

    def delta_prime(self, k: int) -> ExactReal:
        """q_k alpha - p_k"""
        cached = self._delta_primes.get(k)
        if cached is None:
            if self.is_rational and k > self.depth:
                raise IndexBeyondDepth(f"delta index {k} beyond depth {self.depth} of {self.alpha}")
            cached = self.alpha * self.q(k) - self.p(k)
            self._delta_primes[k] = cached
        return cached

    def delta(self, k: int) -> ExactReal:
        value = self.delta_prime(k)
        return value if k % 2 == 0 else -value

    @cached_property
    def in_unit_interval(self) -> bool:
        return self.alpha.sign() >= 0 and self.alpha < 1

    def has_index(self, k: int) -> bool:
        """True when digit a_k is a finite digit of the expansion"""
        return not self.is_rational or k <= self.depth + 1

    def max_digit_index(self) -> Depth:
        """Last index usable as a numeration position (r for rationals)"""
        return self.depth


@lru_cache(maxsize=512)
def get_base(alpha: ExactReal) -> AlphaBase:
    """Shared AlphaBase per alpha value"""
    return AlphaBase(alpha)


def base_of(alpha) -> AlphaBase:
    if isinstance(alpha, AlphaBase):
        return alpha
    return get_base(as_exact(alpha))


def convergent(x, k: int) -> Tuple[int, int]:
    base = base_of(x)
    return base.p(k), base.q(k)


def delta(alpha, i: int) -> ExactReal:
    return base_of(alpha).delta(i)


def delta_prime(alpha, i: int) -> ExactReal:
    return base_of(alpha).delta_prime(i)


def semiconvergents(x, max_denominator: int) -> List[Fraction]:
    """
    Rationals (m p_(s-1) + p_(s-2)) / (m q_(s-1) + q_(s-2)) = [a0, ..., a_(s-1), m]
    with 1 <= m <= a_s and a_s finite, whose denominator is at most
    max_denominator, ascending by denominator. m = 0 only repeats the
    convergent p_(s-2)/q_(s-2), and at s = 0 it would be the constant [0].
    """
    if max_denominator < 1:
        raise DomainError("max_denominator must be >= 1")
    base = base_of(x)
    found: Dict[Fraction, None] = {}
    s = 0
    while True:
        if base.is_rational and s > base.depth:
            break
        if s >= 1 and base.q(s - 1) + base.q(s - 2) > max_denominator:
            break
        for m in range(1, base.a(s) + 1):
            den = m * base.q(s - 1) + base.q(s - 2)
            if den > max_denominator:
                break
            found[Fraction(m * base.p(s - 1) + base.p(s - 2), den)] = None
        s += 1
    return sorted(found, key=lambda f: (f.denominator, f))


def _sided_candidates(base: AlphaBase, side: str, max_denominator: int) -> List[Fraction]:
    candidates: List[Fraction] = []
    limit = base.depth + 1 if base.is_rational else None

    def usable(k: int) -> bool:
        return limit is None or k <= limit

    def add_family(lo_index: int, hi_index: int, m_values):
        p0, q0 = base.p(lo_index), base.q(lo_index)
        p1, q1 = base.p(hi_index), base.q(hi_index)
        for m in m_values:
            den = q0 + m * q1
            if den > max_denominator:
                break
            if den > 0:
                candidates.append(Fraction(p0 + m * p1, den))

    def m_range(start: int, digit_index: int):
        # a_k past the end of a rational expansion is infinite: only m = 0
        if not usable(digit_index):
            return range(start, 1)
        return range(start, base.a(digit_index) + 1)

    if side == "left":
        i = 0
        while usable(2 * i) and base.q(2 * i) <= max_denominator:
            if usable(2 * i + 1):
                add_family(2 * i, 2 * i + 1, m_range(0, 2 * i + 2))
            else:
                candidates.append(Fraction(base.p(2 * i), base.q(2 * i)))
            i += 1
    elif side == "right":
        add_family(-1, 0, m_range(1, 1))
        i = 1
        while usable(2 * i - 1) and base.q(2 * i - 1) <= max_denominator:
            if usable(2 * i):
                add_family(2 * i - 1, 2 * i, m_range(0, 2 * i + 1))
            else:
                candidates.append(Fraction(base.p(2 * i - 1), base.q(2 * i - 1)))
            i += 1
    else:
        raise DomainError(f"side must be 'left' or 'right', got '{side}'")

    if base.is_rational and base.alpha.as_fraction().denominator <= max_denominator:
        candidates.append(base.alpha.as_fraction())
    return candidates


def best_sided_rational_approximations(x, side: str, max_denominator: int) -> List[Fraction]:
    """
    Best left (p/q <= x) or right (p/q >= x) rational approximations with
    denominator <= max_denominator, from the semi-convergent parametrization.
    """
    if max_denominator < 1:
        raise DomainError("max_denominator must be >= 1")
    base = base_of(x)
    x = base.alpha
    candidates = _sided_candidates(base, side, max_denominator)
    if side == "left":
        candidates = [c for c in candidates if c <= x]
    else:
        candidates = [c for c in candidates if c >= x]

    # keep strict records in denominator order
    records: List[Fraction] = []
    best_distance = None
    for c in sorted(set(candidates), key=lambda f: (f.denominator, abs(x - f))):
        distance = abs(x - c)
        if best_distance is None or distance < best_distance:
            records.append(c)
            best_distance = distance
    return records


def _digit_at(digits: Union[CfeStream, Sequence[int]], k: int) -> ExtendedDigit:
    if isinstance(digits, CfeStream):
        return digits.digit(k)
    return digits[k] if k < len(digits) else INFINITY


def compare_cfe_alo(x_digits, y_digits, limit: int = None) -> int:
    """
    Compare two CFE digit sequences as the reals they denote: -1, 0 or 1.

    Digits past the end are INFINITY; at the first differing index k a
    larger digit means a larger value for even k and a smaller one for odd k.
    """
    limit = limit or settings.stream.max_digits
    for k in range(limit):
        s, t = _digit_at(x_digits, k), _digit_at(y_digits, k)
        if s is INFINITY and t is INFINITY:
            return 0
        if s != t:
            bigger = 1 if s > t else -1
            return bigger if k % 2 == 0 else -bigger
    raise IncomparableStreams(f"digit sequences agree on the first {limit} digits")


def best_rational_between(theta, theta2) -> Fraction:
    """
    The unique rational of least denominator in the closed interval between
    theta and theta2 (endpoints in either order).
    """
    theta, theta2 = as_exact(theta), as_exact(theta2)
    if theta == theta2:
        raise EqualEndpoints(f"endpoints are equal: {theta}")
    lo, hi = (theta, theta2) if theta < theta2 else (theta2, theta)

    first_integer = lo.ceil()
    if first_integer <= hi:
        if first_integer + 1 <= hi:
            raise DomainError(f"[{lo}, {hi}] contains several integers")
        return Fraction(first_integer)

    shift = lo.floor()
    lo_stream, hi_stream = CfeStream(lo - shift), CfeStream(hi - shift)
    mu_lo, mu_hi = mu_depth(lo), mu_depth(hi)

    r = 0
    while lo_stream.digit(r) == hi_stream.digit(r):
        r += 1
        if r > settings.stream.max_digits:
            raise NonTerminatingStream("endpoint expansions agree too long")

    if r <= min(mu_lo, mu_hi):
        digits = lo_stream.take(r) + [min(lo_stream.digit(r), hi_stream.digit(r)), 1]
        gamma = cfe_value(digits).as_fraction() + shift
    else:
        closer = lo if mu_lo <= mu_hi else hi
        gamma = closer.as_fraction()

    assert lo <= gamma <= hi, "best rational must lie in the interval"
    logger.debug("best_rational_found", lo=str(lo), hi=str(hi), gamma=str(gamma), split_index=r)
    return gamma


def period_of(x, limit: int = None) -> Tuple[List[int], List[int]]:
    """(pre-period digits, period digits) of a quadratic irrational"""
    x = as_exact(x)
    if x.is_rational:
        raise DomainError(f"{x} is rational and has no period")
    limit = limit or settings.stream.max_digits
    seen: Dict[ExactReal, int] = {}
    digits: List[int] = []
    complete = x
    for k in range(limit):
        if k > 0 and complete in seen:
            start = seen[complete]
            return digits[:start], digits[start:]
        if k > 0:
            seen[complete] = k
        t = complete.floor()
        digits.append(t)
        complete = (complete - t).reciprocal()
    raise NonTerminatingStream(f"no period found within {limit} digits")


def format_cfe(digits: Sequence[int]) -> str:
    return "[" + ",".join(str(t) for t in digits) + "]"


_CFE_TEXT = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*\d+)*)\s*\]\s*$")


def parse_cfe(text: str) -> List[int]:
    match = _CFE_TEXT.match(text)
    if match is None:
        raise ExpressionParseError(f"not a CFE digit list: '{text}'")
    return [int(part) for part in match.group(1).split(",")]


def digit_list(x) -> List[int]:
    """Complete CFE digit list of a rational"""
    return CfeStream(x).finite_digits()

