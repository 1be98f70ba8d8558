"""
Numeration Toolkit Source Package
"""

# This file makes 'src' a Python package
