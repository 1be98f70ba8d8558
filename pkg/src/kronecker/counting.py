"""
Numeration Toolkit - Repartition Counting

C(alpha, beta, nu) = #{k in [0, nu-1] : {k alpha} < beta} read off the digits
n = Psi^-1(nu) and b = Lambda^-1(beta) without visiting the nu points:

    C = sum_(i=1)^s (-1)^(i-1) [b_i nu_i + tau_i + eps_i - eps'_i]

with s the shorter of the two digit supports and nu_i the integer coded over
alpha_i by the tail of n. The companion count over [0, nu] with <= adds
D = 1[n <=_A b] + 1[b <=_R n] - 1[n = b].

Key Features:
- CountWitness with one row per index, nu_i computed twice (digits and recurrence)
- Works with non-terminating beta digits for irrational alpha
- Rational alpha: beta snapped to the 1/q grid, nu = q counted directly
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import structlog

from src.errors.error_handling_system import DomainError, OutOfRange
from src.exact_numbers.exact_real import ExactReal, as_exact, frac
from src.numeration.digit_word import DigitWord, numeration_base
from src.numeration.numeration import DigitStream, psi, psi_inv

logger = structlog.get_logger().bind(component="counting")


@dataclass(frozen=True)
class CountRow:
    i: int
    b: int
    n: int
    nu: int
    nu_recurrence: int
    tau: int
    eps: int
    eps_prime: int

    @property
    def term(self) -> int:
        sign = 1 if self.i % 2 == 1 else -1
        return sign * (self.b * self.nu + self.tau + self.eps - self.eps_prime)


@dataclass
class CountWitness:
    rows: List[CountRow] = field(default_factory=list)
    s: int = 0
    correction: Optional[int] = None

    @property
    def total(self) -> int:
        return sum(row.term for row in self.rows)


@dataclass
class CountResult:
    count: int
    witness: CountWitness


def _at(digits: Sequence[int], j: int) -> int:
    return digits[j - 1] if 1 <= j <= len(digits) else 0


def _alo_less(x: Sequence[int], y: Sequence[int]) -> bool:
    """x <_A y for zero-filled sequences"""
    for j in range(1, max(len(x), len(y)) + 1):
        u, v = _at(x, j), _at(y, j)
        if u != v:
            return u < v if j % 2 == 1 else u > v
    return False


def _rlo_less(x: Sequence[int], y: Sequence[int]) -> bool:
    """x <_R y for finite sequences"""
    for j in range(max(len(x), len(y)), 0, -1):
        u, v = _at(x, j), _at(y, j)
        if u != v:
            return u < v
    return False


class _Digits:
    """Digits of beta long enough to settle every comparison with n"""

    def __init__(self, base, beta: ExactReal, length: int):
        stream = DigitStream(base.alpha, beta)
        # a live remainder yields a nonzero digit within two steps
        digits = stream.take(length + 3)
        self.finite = stream.terminated
        while digits and digits[-1] == 0:
            digits.pop()
        self.digits = digits
        self.support = len(digits) if self.finite else None


def _grid_beta(base, beta: ExactReal) -> ExactReal:
    """{k alpha} < beta iff {k alpha} < ceil(q beta)/q for rational alpha = p/q"""
    q = base.denominator
    return as_exact(Fraction((beta * q).ceil(), q))


def _prepare(alpha, beta, nu: int):
    base = numeration_base(alpha)
    beta = as_exact(beta)
    if beta.sign() < 0 or beta >= 1:
        raise DomainError(f"beta must lie in [0, 1[, got {beta}")
    if nu < 0:
        raise DomainError(f"nu must be >= 0, got {nu}")
    if base.is_rational:
        if nu > base.denominator:
            raise OutOfRange(f"nu = {nu} exceeds q = {base.denominator}")
    return base, beta


def _nu_values(base, n: Sequence[int], s: int):
    """(digit-characterised nu_i, recurrence nu_i) for i = 1..s"""
    by_digits, by_recurrence = [], []
    previous = psi(base.alpha, DigitWord(base.alpha, tuple(n)))
    x = base.alpha
    for i in range(1, s + 1):
        tail_nonzero = any(n[i:])
        carry = _at(n, i + 1) == 0 and tail_nonzero
        previous = (x * previous).floor() + (1 if carry else 0)
        by_recurrence.append(previous)
        x = frac(x.reciprocal())
        if not tail_nonzero:
            by_digits.append(0)
            continue
        word = (1,) + tuple(n[i + 1:]) if carry else tuple(n[i:])
        by_digits.append(psi(x, DigitWord(x, word)))
    return by_digits, by_recurrence


def _count_rows(base, n: List[int], b: _Digits) -> CountWitness:
    s = len(n) if b.support is None else min(len(n), b.support)
    nus, recurrences = _nu_values(base, n, s)
    witness = CountWitness(s=s)
    for i in range(1, s + 1):
        n_i, b_i = _at(n, i), _at(b.digits, i)
        tail_n, tail_b = n[i:], b.digits[i:]
        if n_i * _at(n, i + 1) == 0 and any(tail_n):
            tau = 1
        else:
            tau = min(b_i, n_i)
        eps = int(b_i < n_i and _alo_less(tail_b, tail_n))
        eps_prime = int(b.finite and _rlo_less(tail_b, tail_n))
        witness.rows.append(CountRow(i, b_i, n_i, nus[i - 1], recurrences[i - 1], tau, eps, eps_prime))
    return witness


def count_below_with_witness(alpha, beta, nu: int) -> CountResult:
    base, beta = _prepare(alpha, beta, nu)
    if base.is_rational:
        beta = _grid_beta(base, beta)
        if beta >= 1:
            return CountResult(nu, CountWitness())
        if nu == base.denominator:
            return CountResult((beta * nu).floor(), CountWitness())
    if nu == 0 or beta.sign() == 0:
        return CountResult(0, CountWitness())

    n = list(psi_inv(base.alpha, nu).digits)
    b = _Digits(base, beta, len(n))
    witness = _count_rows(base, n, b)
    mismatched = [row.i for row in witness.rows if row.nu != row.nu_recurrence]
    if mismatched:
        logger.debug("nu_recurrence_differs", alpha=str(base.alpha), nu=nu, indices=mismatched)
    return CountResult(witness.total, witness)


def count_below(alpha, beta, nu: int) -> int:
    """#{k in [0, nu-1] : {k alpha} < beta}"""
    return count_below_with_witness(alpha, beta, nu).count


def count_below_or_equal_with_witness(alpha, beta, nu: int) -> CountResult:
    base, beta = _prepare(alpha, beta, nu)
    if base.is_rational:
        if nu >= base.denominator:
            raise OutOfRange(f"nu = {nu} must stay below q = {base.denominator}")
        if not (beta * base.denominator).is_integer:
            # off the grid <= and < agree
            return count_below_with_witness(base.alpha, beta, nu + 1)

    result = count_below_with_witness(base.alpha, beta, nu)
    n = list(psi_inv(base.alpha, nu).digits)
    b = _Digits(base, beta, len(n))
    equal = b.finite and n == b.digits
    correction = (int(not _alo_less(b.digits, n))
                  + int(b.finite and not _rlo_less(n, b.digits))
                  - int(equal))
    result.witness.correction = correction
    return CountResult(result.count + correction, result.witness)


def count_below_or_equal(alpha, beta, nu: int) -> int:
    """#{k in [0, nu] : {k alpha} <= beta}"""
    return count_below_or_equal_with_witness(alpha, beta, nu).count


def repartition(alpha, beta, nu: int) -> ExactReal:
    """mu_nu([0, beta[) = C(alpha, beta, nu) / nu"""
    if nu < 1:
        raise DomainError(f"repartition needs nu >= 1, got {nu}")
    return as_exact(Fraction(count_below(alpha, beta, nu), nu))
