"""
Dynamics Package
Skew-product digit generation, Gauss-shift structure and germ successors
"""

from .skew_product import SkewState, SkewStep, OrbitPoint, in_trapezoid, skew_step, skew_orbit
from .shift import (
    ShiftedReal,
    DigitBlock,
    KAlphaReport,
    shift_alpha,
    shifted_word,
    shift_integer,
    shift_real,
    shift_real_case,
    first_digit_block,
    shift_block_word,
    k_alpha_decomposition_check
)
from .germs import GermElement, germ_successor, germ_value, same_germ

__all__ = [
    'SkewState',
    'SkewStep',
    'OrbitPoint',
    'in_trapezoid',
    'skew_step',
    'skew_orbit',
    'ShiftedReal',
    'DigitBlock',
    'KAlphaReport',
    'shift_alpha',
    'shifted_word',
    'shift_integer',
    'shift_real',
    'shift_real_case',
    'first_digit_block',
    'shift_block_word',
    'k_alpha_decomposition_check',
    'GermElement',
    'germ_successor',
    'germ_value',
    'same_germ'
]

__version__ = '1.0.0'
