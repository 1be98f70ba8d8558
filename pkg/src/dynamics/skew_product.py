"""
Numeration Toolkit - Skew Product

The skew map H on the open trapezoid U = {0 < x < 1, -x < y < 1}:
H(x, y) = (T(x), min(a, ceil(y/x)) - y/x) with a the x-digit, and the digit
map A(x, y) = (a, min(a, ceil(y/x))). Iterating from (alpha, beta) emits the
CFE digits of alpha next to the Lambda digits of beta.

Key Features:
- SkewState validated against U with exact comparisons
- x-digit from the extended maps (A1, T1), exact for rational alpha up to its depth
- Orbit generator that reports exhaustion instead of dividing by zero
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import structlog

from src.errors.error_handling_system import DomainError
from src.exact_numbers.exact_real import ExactReal, as_exact, gauss_a1, gauss_t1

logger = structlog.get_logger().bind(component="skew_product")


def in_trapezoid(x, y) -> bool:
    x, y = as_exact(x), as_exact(y)
    return x.sign() > 0 and x < 1 and (y + x).sign() > 0 and y < 1


@dataclass(frozen=True)
class SkewState:
    x: ExactReal
    y: ExactReal

    def __post_init__(self):
        x, y = as_exact(self.x), as_exact(self.y)
        if not in_trapezoid(x, y):
            raise DomainError(f"({x}, {y}) is outside the trapezoid 0 < x < 1, -x < y < 1")
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)


@dataclass(frozen=True)
class SkewStep:
    digits: Tuple[int, int]
    next: Optional[SkewState]

    @property
    def exhausted(self) -> bool:
        return self.next is None


def skew_step(s: SkewState) -> SkewStep:
    """A then H: the digit pair (a, b) and the next state (None once x leaves ]0, 1[)"""
    if not isinstance(s, SkewState):
        raise DomainError(f"expected a SkewState, got {s!r}")
    a = gauss_a1(s.x)
    ratio = s.y / s.x
    b = min(a, ratio.ceil())
    next_x = gauss_t1(s.x)
    next_y = b - ratio
    if in_trapezoid(next_x, next_y):
        return SkewStep((a, b), SkewState(next_x, next_y))
    return SkewStep((a, b), None)


@dataclass(frozen=True)
class OrbitPoint:
    k: int
    digits: Tuple[int, int]
    state: SkewState
    exhausted: bool


def skew_orbit(alpha, beta, steps: int) -> Iterator[OrbitPoint]:
    """Points k = 1..steps: digit pair (a_k, b_k) and the state it was read from"""
    state = SkewState(alpha, beta)
    for k in range(1, steps + 1):
        step = skew_step(state)
        yield OrbitPoint(k, step.digits, state, step.exhausted)
        if step.exhausted:
            logger.debug("skew_orbit_exhausted", k=k, alpha=str(alpha))
            return
        state = step.next
