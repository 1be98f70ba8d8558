"""
Configuration Package
Environment-driven settings and logging setup
"""

from .settings import (
    Settings,
    OracleConfig,
    StreamConfig,
    BatchConfig,
    ConfigurationError,
    settings
)
from .log_setup import setup_logging

__all__ = [
    'Settings',
    'OracleConfig',
    'StreamConfig',
    'BatchConfig',
    'ConfigurationError',
    'settings',
    'setup_logging'
]

__version__ = '1.0.0'
