"""
CFE Package
Continued-fraction expansions, convergents and best rational searches
"""

from .cfe_core import (
    CfeStream,
    AlphaBase,
    cfe_of,
    cfe_value,
    mu_depth,
    convergent,
    delta,
    delta_prime,
    get_base,
    base_of,
    semiconvergents,
    best_rational_between,
    best_sided_rational_approximations,
    compare_cfe_alo,
    period_of,
    format_cfe,
    parse_cfe,
    digit_list
)

__all__ = [
    'CfeStream',
    'AlphaBase',
    'cfe_of',
    'cfe_value',
    'mu_depth',
    'convergent',
    'delta',
    'delta_prime',
    'get_base',
    'base_of',
    'semiconvergents',
    'best_rational_between',
    'best_sided_rational_approximations',
    'compare_cfe_alo',
    'period_of',
    'format_cfe',
    'parse_cfe',
    'digit_list'
]

__version__ = '1.0.0'
