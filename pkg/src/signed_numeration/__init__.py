"""
Signed Numeration Package
CFE-complement and the extension of Psi to all integers
"""

from .complement import (
    ComplementBase,
    l_alpha,
    relation_word,
    conversion_steps,
    cfe_complement,
    psi_signed,
    psi_signed_inv,
    signed_range
)

__all__ = [
    'ComplementBase',
    'l_alpha',
    'relation_word',
    'conversion_steps',
    'cfe_complement',
    'psi_signed',
    'psi_signed_inv',
    'signed_range'
]

__version__ = '1.0.0'
