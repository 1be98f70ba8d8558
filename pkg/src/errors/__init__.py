"""
Error Handling Package
Error categories, exception hierarchy and sweep error reporting
"""

from .error_handling_system import (
    ErrorCategory,
    ErrorRecord,
    ErrorHandler,
    NumerationError,
    DomainError,
    DivisionByZero,
    IncompatibleFieldsError,
    EmptyInput,
    IndexBeyondDepth,
    EqualEndpoints,
    NotAdmissible,
    OutOfRange,
    NotGridPoint,
    IncomparableStreams,
    NotConvertible,
    UnsupportedTail,
    ZeroWord,
    NoSuccessor,
    TooLarge,
    NonTerminatingStream,
    ExpressionParseError,
    OracleMismatch
)

__all__ = [
    'ErrorCategory',
    'ErrorRecord',
    'ErrorHandler',
    'NumerationError',
    'DomainError',
    'DivisionByZero',
    'IncompatibleFieldsError',
    'EmptyInput',
    'IndexBeyondDepth',
    'EqualEndpoints',
    'NotAdmissible',
    'OutOfRange',
    'NotGridPoint',
    'IncomparableStreams',
    'NotConvertible',
    'UnsupportedTail',
    'ZeroWord',
    'NoSuccessor',
    'TooLarge',
    'NonTerminatingStream',
    'ExpressionParseError',
    'OracleMismatch'
]

__version__ = '1.0.0'
