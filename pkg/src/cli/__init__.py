"""
CLI Package
Command line entry point for the numeration toolkit
"""

from .main import build_parser, run, main

__all__ = [
    'build_parser',
    'run',
    'main'
]

__version__ = '1.0.0'
