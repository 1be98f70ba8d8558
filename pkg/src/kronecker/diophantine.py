"""
Numeration Toolkit - Diophantine Applications

Floor sums of Kronecker sequences, the horizon up to which two slopes give the
same floors (and the same order of their fractional parts), and best
one-sided approximations of a target beta by the points {n alpha}.

Key Features:
- floors_match_horizon from the best rational of ]alpha, alpha2]
- floor_sum / frac_sum and the semi-convergent floor-sum criterion
- Right and left best alpha-approximations read off the Lambda digits of beta
"""

from fractions import Fraction
from math import gcd
from typing import List, Tuple

import structlog

from src.cfe.cfe_core import best_rational_between
from src.errors.error_handling_system import DomainError
from src.exact_numbers.exact_real import ZERO, ExactReal, as_exact, frac
from src.numeration.digit_word import numeration_base, position_exists
from src.numeration.numeration import lambda_stream

logger = structlog.get_logger().bind(component="diophantine")

SIDES = ("left", "right")


def _mediant_descent(lo: ExactReal, hi: ExactReal) -> Fraction:
    """Least-denominator fraction of ]lo, hi] by Stern-Brocot mediants"""
    left_n, left_d, right_n, right_d = 0, 1, 1, 0
    while True:
        mediant = Fraction(left_n + right_n, left_d + right_d)
        if as_exact(mediant) <= lo:
            left_n, left_d = mediant.numerator, mediant.denominator
        elif as_exact(mediant) > hi:
            right_n, right_d = mediant.numerator, mediant.denominator
        else:
            return mediant


def floors_match_horizon(alpha, alpha2) -> int:
    """Largest N with floor(n alpha) = floor(n alpha2) for every n in [0, N-1]"""
    alpha, alpha2 = as_exact(alpha), as_exact(alpha2)
    if not (0 < alpha < alpha2 < 1):
        raise DomainError(f"floors_match_horizon needs 0 < alpha < alpha2 < 1, got {alpha}, {alpha2}")
    best = best_rational_between(alpha, alpha2)
    if best == alpha:
        best = _mediant_descent(alpha, alpha2)
    logger.debug("floors_match_horizon", alpha=str(alpha), alpha2=str(alpha2), best=str(best))
    return best.denominator


def _ranks(values: List[ExactReal]) -> List[int]:
    distinct = sorted(set(values))
    position = {v: k for k, v in enumerate(distinct)}
    return [position[v] for v in values]


def same_order(alpha, alpha2, n: int) -> bool:
    """{k alpha}, k < n, sorted the same way as {k alpha2}"""
    alpha, alpha2 = as_exact(alpha), as_exact(alpha2)
    first = _ranks([frac(alpha * k) for k in range(n)])
    second = _ranks([frac(alpha2 * k) for k in range(n)])
    return first == second


def floor_sum(x, n: int) -> int:
    """I_n(x) = sum of floor(k x) for k in [0, n-1]"""
    if n < 0:
        raise DomainError(f"floor_sum needs n >= 0, got {n}")
    x = as_exact(x)
    return sum((x * k).floor() for k in range(n))


def frac_sum(x, n: int) -> ExactReal:
    """F_n(x) = sum of {k x} for k in [0, n-1]"""
    if n < 0:
        raise DomainError(f"frac_sum needs n >= 0, got {n}")
    x = as_exact(x)
    total = ZERO
    for k in range(n):
        total = total + frac(x * k)
    return total


def is_semiconvergent_by_floor_sum(alpha, p: int, q: int) -> bool:
    """
    sum_(k<q) floor(k alpha) = (p-1)(q-1)/2. The caller guarantees alpha is
    not the left neighbour of p/q for which the criterion degenerates.
    """
    if q < 1 or gcd(p, q) != 1:
        raise DomainError(f"p/q must be reduced with q >= 1, got {p}/{q}")
    return 2 * floor_sum(alpha, q) == (p - 1) * (q - 1)


def semiconvergent_mean_frac(alpha, p: int, q: int) -> Tuple[ExactReal, ExactReal]:
    """(1/(q-1)) sum_(k=1)^(q-1) {k alpha} and 1/2 + (q alpha - p)/2"""
    if q < 2:
        raise DomainError(f"mean value needs q >= 2, got {q}")
    alpha = as_exact(alpha)
    mean = frac_sum(alpha, q) / (q - 1)
    expected = (alpha * q - p) / 2 + Fraction(1, 2)
    return mean, expected


def best_sided_alpha_approximations(alpha, beta, side: str, n_max: int) -> List[int]:
    """
    Right: 0, Psi(b) when b terminates, and sum_(i<=2k-1) b_i q_(i-1) + j q_(2k-1)
    for 0 <= j < b_(2k). Left: Psi(b) when b terminates, and
    sum_(i<=2k) b_i q_(i-1) + j q_(2k) for 0 <= j < b_(2k+1).
    """
    if side not in SIDES:
        raise DomainError(f"side must be 'left' or 'right', got '{side}'")
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    base = numeration_base(alpha)
    stream = lambda_stream(base.alpha, beta)

    found = {0} if side == "right" else set()
    parity = 0 if side == "right" else 1
    # partial = sum of b_i q_(i-1) over i < k
    partial = 0
    k = 1
    while position_exists(base, k) and partial <= n_max:
        digit = stream.digit(k)
        if k % 2 == parity:
            for j in range(digit):
                found.add(partial + j * base.q(k - 1))
        partial += digit * base.q(k - 1)
        horizon = stream.horizon()
        if horizon is not None and k >= horizon - 1:
            break
        k += 1
    if stream.terminated:
        # exact hit: {Psi(b) alpha} = beta
        found.add(partial)
    return sorted(n for n in found if n <= n_max)


def _distance_to_integer(x: ExactReal) -> ExactReal:
    f = frac(x)
    return min(f, 1 - f)


def best_alpha_approximations(alpha, beta, n_max: int) -> List[int]:
    """n among the one-sided lists whose ||n alpha - beta|| is a strict record"""
    base = numeration_base(alpha)
    beta = as_exact(beta)
    candidates = set(best_sided_alpha_approximations(base.alpha, beta, "right", n_max))
    candidates |= set(best_sided_alpha_approximations(base.alpha, beta, "left", n_max))
    records: List[int] = []
    best = None
    for n in sorted(candidates):
        distance = _distance_to_integer(base.alpha * n - beta)
        if best is None or distance < best:
            records.append(n)
            best = distance
    return records
