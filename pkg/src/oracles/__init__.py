"""
Oracles Package
Brute-force reference computations for cross-checking
"""

from .brute_force import (
    OracleReport,
    run_oracle,
    oracle_enumerate_admissible,
    oracle_psi_rank,
    oracle_gaps,
    oracle_records,
    oracle_best_alpha,
    oracle_count,
    oracle_floor_horizon,
    oracle_same_order,
    oracle_best_rational,
    oracle_sided_rationals,
    oracle_semiconvergents,
    oracle_cfe_digits,
    oracle_cfe_value,
    oracle_signed_index,
    oracle_word_point,
    oracle_real_prefix
)

__all__ = [
    'OracleReport',
    'run_oracle',
    'oracle_enumerate_admissible',
    'oracle_psi_rank',
    'oracle_gaps',
    'oracle_records',
    'oracle_best_alpha',
    'oracle_count',
    'oracle_floor_horizon',
    'oracle_same_order',
    'oracle_best_rational',
    'oracle_sided_rationals',
    'oracle_semiconvergents',
    'oracle_cfe_digits',
    'oracle_cfe_value',
    'oracle_signed_index',
    'oracle_word_point',
    'oracle_real_prefix'
]

__version__ = '1.0.0'
