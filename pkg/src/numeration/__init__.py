"""
Numeration Package
Admissible digit words and the Psi / Lambda order isomorphisms
"""

from .digit_word import (
    Tail,
    DigitWord,
    numeration_base,
    format_word,
    parse_word,
    word_to_json,
    compare_rlo,
    compare_alo
)
from .numeration import (
    DigitStream,
    as_word,
    is_admissible,
    linear_value,
    psi,
    psi_inv,
    lambda_value,
    lambda_stream,
    lambda_inv,
    lambda_tilde,
    lambda_tilde_inv,
    reflect,
    word_count,
    enumerate_words
)
from .improper import ImproperExpansion, improper_value, normalize_improper

__all__ = [
    'Tail',
    'DigitWord',
    'numeration_base',
    'format_word',
    'parse_word',
    'word_to_json',
    'compare_rlo',
    'compare_alo',
    'DigitStream',
    'as_word',
    'is_admissible',
    'linear_value',
    'psi',
    'psi_inv',
    'lambda_value',
    'lambda_stream',
    'lambda_inv',
    'lambda_tilde',
    'lambda_tilde_inv',
    'reflect',
    'word_count',
    'enumerate_words',
    'ImproperExpansion',
    'improper_value',
    'normalize_improper'
]

__version__ = '1.0.0'
