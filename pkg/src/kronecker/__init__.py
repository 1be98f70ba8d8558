"""
Kronecker Package
Three-distance spectra, floor sums, best alpha-approximations and counting
"""

from .three_distance import GapSpectrum, KroneckerCircle, gap_lengths, predicted_lengths, spectra, three_distance
from .diophantine import (
    floors_match_horizon,
    same_order,
    floor_sum,
    frac_sum,
    is_semiconvergent_by_floor_sum,
    semiconvergent_mean_frac,
    best_sided_alpha_approximations,
    best_alpha_approximations
)
from .counting import (
    CountRow,
    CountWitness,
    CountResult,
    count_below,
    count_below_with_witness,
    count_below_or_equal,
    count_below_or_equal_with_witness,
    repartition
)

__all__ = [
    'GapSpectrum',
    'KroneckerCircle',
    'gap_lengths',
    'predicted_lengths',
    'spectra',
    'three_distance',
    'floors_match_horizon',
    'same_order',
    'floor_sum',
    'frac_sum',
    'is_semiconvergent_by_floor_sum',
    'semiconvergent_mean_frac',
    'best_sided_alpha_approximations',
    'best_alpha_approximations',
    'CountRow',
    'CountWitness',
    'CountResult',
    'count_below',
    'count_below_with_witness',
    'count_below_or_equal',
    'count_below_or_equal_with_witness',
    'repartition'
]

__version__ = '1.0.0'
