"""
Numeration Toolkit - Three-Distance Spectrum

The points {k alpha}, k = 0..N-1, cut the circle into N arcs of at most three
lengths. The spectrum is computed twice: from the exactly sorted points, and
from the digits of N - 1 with s the least index such that N <= q_s + q_(s-1)
and i = a_s - n_s. A disagreement raises OracleMismatch.

Key Features:
- KroneckerCircle keeps the sorted points and the arc multiset as N grows
- Predicted lengths delta_(s-1), delta_s + i delta_(s-1), delta_s + (i+1) delta_(s-1)
- Two-valued boundary case N = q_s + (1 - i) q_(s-1) detected on integers
- spectra() walks N = 1..N_max with one insertion per step
"""

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import structlog

from src.errors.error_handling_system import DomainError, OracleMismatch, OutOfRange
from src.exact_numbers.exact_real import ONE, ExactReal
from src.numeration.digit_word import numeration_base
from src.numeration.numeration import psi_inv

logger = structlog.get_logger().bind(component="three_distance")


@dataclass
class GapSpectrum:
    lengths: List[Tuple[ExactReal, int]]
    predicted: List[ExactReal] = field(default_factory=list)
    s: Optional[int] = None
    i: Optional[int] = None
    two_valued: bool = False
    matches: bool = True

    @property
    def total_count(self) -> int:
        return sum(count for _, count in self.lengths)

    @property
    def total_length(self) -> ExactReal:
        total = ExactReal(0)
        for length, count in self.lengths:
            total = total + length * count
        return total


class KroneckerCircle:
    """
    The distinct points {k alpha}, k < N, in increasing order, with the
    multiset of arc lengths between neighbours (the last arc runs to 1).
    """

    def __init__(self, alpha):
        self.alpha = numeration_base(alpha).alpha
        self.n = 0
        self.points: List[ExactReal] = []
        self.arcs: Counter = Counter()

    def add_next(self) -> ExactReal:
        """Insert {N alpha} and split the arc it falls in"""
        point = (self.alpha * self.n).frac()
        self.n += 1
        if not self.points:
            self.points.append(point)
            self.arcs[ONE] += 1
            return point
        # 0 is the first point, so a new point always has a left neighbour
        pos = bisect_left(self.points, point)
        if pos < len(self.points) and self.points[pos] == point:
            return point
        left = self.points[pos - 1]
        right = self.points[pos] if pos < len(self.points) else ONE
        old = right - left
        self.arcs[old] -= 1
        if not self.arcs[old]:
            del self.arcs[old]
        self.arcs[point - left] += 1
        self.arcs[right - point] += 1
        self.points.insert(pos, point)
        return point

    def extend_to(self, n: int) -> "KroneckerCircle":
        while self.n < n:
            self.add_next()
        return self

    def lengths(self) -> List[Tuple[ExactReal, int]]:
        """(length, count) sorted by decreasing length"""
        return sorted(self.arcs.items(), key=lambda item: item[0], reverse=True)


def gap_lengths(alpha, n: int) -> List[Tuple[ExactReal, int]]:
    """(length, count) of the arcs cut by {k alpha}, k < n, sorted by decreasing length"""
    return KroneckerCircle(alpha).extend_to(n).lengths()


def predicted_lengths(alpha, n: int) -> Tuple[List[ExactReal], int, int, bool]:
    """Distinct predicted lengths (descending), s, i and the two-valued flag"""
    base = numeration_base(alpha)
    s = 0
    while n > base.q(s) + base.q(s - 1):
        s += 1
    i = base.a(s) - psi_inv(base.alpha, n - 1).digit(s)
    small, large = base.delta(s - 1), base.delta(s) + base.delta(s - 1) * i
    two_valued = n == base.q(s) + (1 - i) * base.q(s - 1)
    if two_valued:
        values = {large, small}
    else:
        values = {small, large, base.delta(s) + base.delta(s - 1) * (i + 1)}
    return sorted(values, reverse=True), s, i, two_valued


def _check_size(base, n: int):
    if n < 1:
        raise DomainError(f"three_distance needs N >= 1, got {n}")
    if base.is_rational and n > base.denominator:
        raise OutOfRange(f"N = {n} exceeds q = {base.denominator} for alpha = {base.alpha}")


def _spectrum(base, n: int, lengths: List[Tuple[ExactReal, int]], strict: bool) -> GapSpectrum:
    if n == 1:
        return GapSpectrum(lengths=lengths, predicted=[ONE], two_valued=False, matches=lengths == [(ONE, 1)])

    predicted, s, i, two_valued = predicted_lengths(base.alpha, n)
    observed = [length for length, _ in lengths]
    # at most three lengths, and with three the largest is the sum of the others
    shaped = len(observed) < 3 or (len(observed) == 3 and observed[0] == observed[1] + observed[2])
    spectrum = GapSpectrum(
        lengths=lengths,
        predicted=predicted,
        s=s,
        i=i,
        two_valued=two_valued,
        matches=shaped and observed == predicted
    )
    if not spectrum.matches:
        logger.warning("three_distance_mismatch", alpha=str(base.alpha), n=n,
                       observed=[str(x) for x in observed], predicted=[str(x) for x in predicted])
        if strict:
            raise OracleMismatch(
                f"sorted gaps {[str(x) for x in observed]} differ from predicted "
                f"{[str(x) for x in predicted]} for alpha = {base.alpha}, N = {n}"
            )
    return spectrum


def three_distance(alpha, n: int, strict: bool = True) -> GapSpectrum:
    """
    Gap spectrum of the first n Kronecker points with its predicted lengths.
    With strict=False a disagreement is returned as matches=False instead of
    raising OracleMismatch.
    """
    base = numeration_base(alpha)
    _check_size(base, n)
    return _spectrum(base, n, gap_lengths(base.alpha, n), strict)


def spectra(alpha, n_max: int, strict: bool = True) -> Iterator[GapSpectrum]:
    """three_distance(alpha, n) for n = 1..n_max, sharing one KroneckerCircle"""
    base = numeration_base(alpha)
    _check_size(base, n_max)
    circle = KroneckerCircle(base.alpha)
    for n in range(1, n_max + 1):
        circle.add_next()
        yield _spectrum(base, n, circle.lengths(), strict)
