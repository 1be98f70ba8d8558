"""
Workflows Package
Formula-versus-oracle sweeps over instance suites
"""

from .batch_sweep_processor import (
    SWEEP_KINDS,
    SweepReport,
    BatchSweepProcessor,
    export_to_csv
)

__all__ = [
    'SWEEP_KINDS',
    'SweepReport',
    'BatchSweepProcessor',
    'export_to_csv'
]

__version__ = '1.0.0'
