"""
Exact Numbers Package
Exact arithmetic over Q and Q(sqrt(d)) plus the extended Gauss-map primitives
"""

from .exact_real import (
    ExactReal,
    ExtendedDigit,
    INFINITY,
    ZERO,
    ONE,
    as_exact,
    to_mpf,
    digit_reciprocal,
    floor,
    frac,
    ceil_minus_one,
    gauss_t1,
    gauss_a1,
    square_free_decomposition
)
from .expression_parser import parse_exact, format_exact, NAMED_CONSTANTS

__all__ = [
    'ExactReal',
    'ExtendedDigit',
    'INFINITY',
    'ZERO',
    'ONE',
    'as_exact',
    'to_mpf',
    'digit_reciprocal',
    'floor',
    'frac',
    'ceil_minus_one',
    'gauss_t1',
    'gauss_a1',
    'square_free_decomposition',
    'parse_exact',
    'format_exact',
    'NAMED_CONSTANTS'
]

__version__ = '1.0.0'
