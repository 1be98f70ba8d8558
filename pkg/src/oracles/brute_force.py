"""
Numeration Toolkit - Brute-Force Oracles

Definitional reference computations used to referee the numeration modules.
Each oracle works from first principles on ExactReal values (direct sorting,
scanning and exhaustive generation) and never calls the digit machinery it
is meant to check.

Key Features:
- Exhaustive admissible-word generation for rational alpha
- Gap spectra, record scans and counts by direct enumeration
- Denominator scans for best rationals and semi-convergents
- run_oracle timing wrapper returning an OracleReport
"""

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Callable, List, Optional, Sequence, Tuple

import structlog

from src.config.settings import settings
from src.errors.error_handling_system import DomainError, TooLarge
from src.exact_numbers.exact_real import INFINITY, ExactReal, as_exact

logger = structlog.get_logger().bind(component="oracles")


@dataclass
class OracleReport:
    instance: str
    value: Any
    method: str
    runtime_seconds: float


def run_oracle(oracle: Callable, *args, instance: str = None, **kwargs) -> OracleReport:
    """Time a single oracle call"""
    start = time.perf_counter()
    value = oracle(*args, **kwargs)
    elapsed = time.perf_counter() - start
    description = instance or ", ".join(str(a) for a in args)
    logger.debug("oracle_run", method=oracle.__name__, instance=description, seconds=elapsed)
    return OracleReport(description, value, oracle.__name__, elapsed)


def _check_size(value: int, limit: int, what: str):
    if value > limit:
        raise TooLarge(f"{what} = {value} exceeds the oracle limit {limit}")


def _fraction_of(alpha) -> Fraction:
    x = as_exact(alpha)
    if not x.is_rational:
        raise DomainError(f"exhaustive enumeration needs rational alpha, got {x}")
    return x.a


def _digits_of(x: Fraction) -> List[int]:
    """a_1..a_r of x in [0, 1[, last digit lowered by one (trailing-1 form)"""
    digits = []
    while x:
        x = 1 / x
        whole = x.numerator // x.denominator
        digits.append(whole)
        x -= whole
    if digits:
        digits[-1] -= 1
    return digits


def _admissible(word: Sequence[int], digits: Sequence[int]) -> bool:
    for j, d in enumerate(word):
        if not 0 <= d <= digits[j]:
            return False
        if d == 0 and any(word[j + 1:]) and not (j >= 1 and word[j - 1] == digits[j - 1]):
            return False
    return True


def oracle_enumerate_admissible(alpha, tail: str = "0") -> List[Tuple[int, ...]]:
    """
    Every admissible digit vector of length r for rational alpha, sorted by
    reversed lexicographic order. The "max" tail drops the zero vector,
    which codes nothing negative.
    """
    x = _fraction_of(alpha)
    if not 0 <= x < 1:
        raise DomainError(f"alpha must lie in [0, 1[, got {x}")
    _check_size(x.denominator, settings.oracle.max_denominator, "denominator")
    digits = _digits_of(x)
    words = [
        word for word in product(*(range(a + 1) for a in digits))
        if _admissible(word, digits)
    ]
    if tail == "max":
        words = [word for word in words if any(word)]
    elif tail != "0":
        raise DomainError(f"tail must be '0' or 'max', got '{tail}'")
    return sorted(words, key=lambda word: tuple(reversed(word)))


def oracle_psi_rank(alpha, word: Sequence[int]) -> int:
    """Position of a zeros-tail word in the exhaustive RLO enumeration"""
    words = oracle_enumerate_admissible(alpha)
    length = len(words[0]) if words else 0
    padded = tuple(word) + (0,) * (length - len(word))
    if len(padded) != length or padded not in words:
        raise DomainError(f"{tuple(word)} is not an admissible word over {alpha}")
    return words.index(padded)


def _points(alpha: ExactReal, count: int) -> List[ExactReal]:
    return [(alpha * k).frac() for k in range(count)]


def oracle_gaps(alpha, n: int) -> List[Tuple[ExactReal, int]]:
    """(length, count) of the arcs between sorted {k alpha}, k < n, and 1"""
    _check_size(n, settings.oracle.max_terms, "N")
    points = sorted(set(_points(as_exact(alpha), n)))
    points.append(as_exact(1))
    counts = Counter(points[k + 1] - points[k] for k in range(len(points) - 1))
    return sorted(counts.items(), key=lambda item: item[0], reverse=True)


def oracle_records(alpha, beta, side: str, n_max: int) -> List[int]:
    """n where {n alpha - beta} (right) or {beta - n alpha} (left) reaches a strict minimum"""
    _check_size(n_max, settings.oracle.max_terms, "n_max")
    alpha, beta = as_exact(alpha), as_exact(beta)
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', got '{side}'")
    records, best = [], None
    for n in range(n_max + 1):
        gap = alpha * n - beta if side == "right" else beta - alpha * n
        distance = gap.frac()
        if best is None or distance < best:
            records.append(n)
            best = distance
    return records


def oracle_best_alpha(alpha, beta, n_max: int) -> List[int]:
    """n where ||n alpha - beta|| reaches a strict minimum"""
    _check_size(n_max, settings.oracle.max_terms, "n_max")
    alpha, beta = as_exact(alpha), as_exact(beta)
    records, best = [], None
    for n in range(n_max + 1):
        f = (alpha * n - beta).frac()
        distance = min(f, 1 - f)
        if best is None or distance < best:
            records.append(n)
            best = distance
    return records


def oracle_count(alpha, beta, nu: int, inclusive: bool = False) -> int:
    """#{k < nu : {k alpha} < beta}, or #{k <= nu : {k alpha} <= beta} when inclusive"""
    _check_size(nu, settings.oracle.max_terms, "nu")
    alpha, beta = as_exact(alpha), as_exact(beta)
    if inclusive:
        return sum(1 for point in _points(alpha, nu + 1) if point <= beta)
    return sum(1 for point in _points(alpha, nu) if point < beta)


def oracle_floor_horizon(alpha, alpha2) -> int:
    """First n with floor(n alpha) != floor(n alpha2)"""
    alpha, alpha2 = as_exact(alpha), as_exact(alpha2)
    for n in range(settings.oracle.max_terms + 1):
        if (alpha * n).floor() != (alpha2 * n).floor():
            return n
    raise TooLarge(f"floors agree beyond n = {settings.oracle.max_terms}")


def oracle_same_order(alpha, alpha2, n: int) -> bool:
    """Pairwise comparison of {k alpha} and {k alpha2} for k < n"""
    _check_size(n, settings.oracle.max_scan_denominator, "N")
    first, second = _points(as_exact(alpha), n), _points(as_exact(alpha2), n)
    for i in range(n):
        for j in range(n):
            if (first[i] < first[j]) != (second[i] < second[j]):
                return False
    return True


def oracle_best_rational(theta, theta2, q_max: int) -> Optional[Fraction]:
    """Least-denominator rational of the closed interval, by scanning q = 1..q_max"""
    _check_size(q_max, settings.oracle.max_scan_denominator, "q_max")
    lo, hi = sorted((as_exact(theta), as_exact(theta2)))
    for q in range(1, q_max + 1):
        p = (lo * q).ceil()
        if as_exact(Fraction(p, q)) <= hi:
            return Fraction(p, q)
    return None


def oracle_sided_rationals(x, side: str, max_denominator: int) -> List[Fraction]:
    """p/q on one side of x that are strictly closer than every smaller denominator"""
    _check_size(max_denominator, settings.oracle.max_scan_denominator, "max_denominator")
    x = as_exact(x)
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', got '{side}'")
    records, best = [], None
    for q in range(1, max_denominator + 1):
        p = (x * q).floor() if side == "left" else (x * q).ceil()
        distance = abs(x - Fraction(p, q))
        if best is None or distance < best:
            records.append(Fraction(p, q))
            best = distance
    return records


def oracle_semiconvergents(x, max_denominator: int) -> List[Fraction]:
    """
    Union of the left and right records for x in [0, 1[, without the constant 0
    which no m >= 1 produces
    """
    found = set(oracle_sided_rationals(x, "left", max_denominator))
    found |= set(oracle_sided_rationals(x, "right", max_denominator))
    found.discard(Fraction(0))
    return sorted(found, key=lambda f: (f.denominator, f))


def oracle_cfe_digits(x, count: int = None) -> List[int]:
    """
    Plain Euclid digits (floor, then reciprocal of the fractional part). A
    rational [a0; ..., a_n] is returned in the form [a0; ..., a_n - 1, 1].
    """
    x = as_exact(x)
    if x.is_rational:
        digits, f = [], x.a
        while True:
            whole = f.numerator // f.denominator
            digits.append(whole)
            f -= whole
            if f == 0:
                break
            f = 1 / f
        digits[-1] -= 1
        digits.append(1)
        return digits if count is None else digits[:count]
    if count is None:
        raise DomainError(f"{x} is irrational; pass a digit count")
    _check_size(count, settings.stream.max_digits, "count")
    digits, y = [], x
    while len(digits) < count:
        whole = y.floor()
        digits.append(whole)
        y = (y - whole).reciprocal()
    return digits


def oracle_cfe_value(digits: Sequence) -> ExactReal:
    """[t0, t1, ...] by the forward p/q recurrence, stopping at the first infinite digit"""
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for t in digits:
        if t is INFINITY:
            break
        p_prev, p = p, t * p + p_prev
        q_prev, q = q, t * q + q_prev
    return as_exact(Fraction(p, q))


def _numeration_table(alpha: ExactReal, length: int) -> Tuple[List[int], List[int], Optional[int]]:
    """a_1..a_L, q_(-1)..q_L and the depth r of a rational alpha (None when irrational)"""
    if alpha.is_rational:
        full = oracle_cfe_digits(alpha)
        depth = len(full) - 2
        digits = full[1:]
    else:
        depth = None
        digits = oracle_cfe_digits(alpha, length + 2)[1:]
    q = [0, 1]
    for a in digits:
        q.append(a * q[-1] + q[-2])
    return digits, q, depth


def oracle_signed_index(alpha, digits: Sequence[int], tail: str = "0") -> int:
    """
    Integer coded by a word: sum d_j q_(j-1) for a zeros tail. A maxes tail
    codes -1 - sum (a_j - d_j) q_(j-1) over irrational alpha, and
    sum d_j q_(j-1) - q over the digits filled up to the depth of alpha = p/q.
    """
    alpha = as_exact(alpha)
    if tail not in ("0", "max"):
        raise DomainError(f"tail must be '0' or 'max', got '{tail}'")
    a, q, depth = _numeration_table(alpha, len(digits))
    if depth is not None and len(digits) > depth:
        raise DomainError(f"word of length {len(digits)} is longer than the depth {depth} of {alpha}")
    # q[j] holds q_(j-1)
    if tail == "0":
        return sum(d * q[j] for j, d in enumerate(digits, start=1))
    if depth is None:
        return -1 - sum((a[j - 1] - d) * q[j] for j, d in enumerate(digits, start=1))
    filled = list(digits) + a[len(digits):depth]
    return sum(d * q[j] for j, d in enumerate(filled, start=1)) - alpha.a.denominator


def oracle_word_point(alpha, digits: Sequence[int], tail: str = "0") -> ExactReal:
    """{n alpha} for the integer n the word codes"""
    alpha = as_exact(alpha)
    return (alpha * oracle_signed_index(alpha, digits, tail)).frac()


def oracle_real_prefix(alpha, beta, digits: Sequence[int]) -> bool:
    """
    Each zeros-tail truncation of beta's digits codes an orbit point {n alpha}
    with no {k alpha}, k < q_k + q_(k-1), strictly between it and beta.
    Prefixes whose scan would pass the oracle term limit are skipped.
    """
    alpha, beta = as_exact(alpha), as_exact(beta)
    a, q, depth = _numeration_table(alpha, len(digits))
    if depth is not None and len(digits) > depth:
        return False
    if not _admissible(digits, a):
        return False
    sizes = [q[k + 1] + q[k] for k in range(1, len(digits) + 1)]
    usable = [size for size in sizes if size <= settings.oracle.max_terms]
    points = _points(alpha, max(usable, default=0))
    for k, size in enumerate(sizes, start=1):
        if size > settings.oracle.max_terms:
            break
        point = (alpha * oracle_signed_index(alpha, digits[:k])).frac()
        low, high = (point, beta) if point < beta else (beta, point)
        if any(low < x < high for x in points[:size]):
            return False
    return True
