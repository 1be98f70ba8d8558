"""
Numeration Toolkit - Error Handling System

Every failure an exact computation can hit is a ``NumerationError`` with a
category. Library code raises; only the batch and CLI layers turn exceptions
into records and reports through ``ErrorHandler``.

Key Features:
- Error categorization shared by exceptions, records and CLI diagnostics
- Exception hierarchy rooted at NumerationError
- Structured logging of recorded failures
- Error summaries with per-category breakdown for sweep reports
"""

from typing import Any, Dict, List, Optional
from enum import Enum
from dataclasses import dataclass
from datetime import datetime
import structlog


class ErrorCategory(Enum):
    """Categories of numeration errors"""
    DOMAIN = "domain"
    DIVISION_BY_ZERO = "division_by_zero"
    INCOMPATIBLE_FIELDS = "incompatible_fields"
    EMPTY_INPUT = "empty_input"
    INDEX_BEYOND_DEPTH = "index_beyond_depth"
    EQUAL_ENDPOINTS = "equal_endpoints"
    NOT_ADMISSIBLE = "not_admissible"
    OUT_OF_RANGE = "out_of_range"
    NOT_GRID_POINT = "not_grid_point"
    INCOMPARABLE_STREAMS = "incomparable_streams"
    NOT_CONVERTIBLE = "not_convertible"
    UNSUPPORTED_TAIL = "unsupported_tail"
    ZERO_WORD = "zero_word"
    NO_SUCCESSOR = "no_successor"
    TOO_LARGE = "too_large"
    NON_TERMINATING = "non_terminating"
    PARSE = "parse"
    ORACLE_MISMATCH = "oracle_mismatch"
    UNKNOWN = "unknown"


# Custom Exception Classes
class NumerationError(Exception):
    """Base exception for numeration errors"""
    category = ErrorCategory.UNKNOWN


class DomainError(NumerationError):
    """Argument outside the operation's domain"""
    category = ErrorCategory.DOMAIN


class DivisionByZero(NumerationError, ZeroDivisionError):
    """Exact division by zero"""
    category = ErrorCategory.DIVISION_BY_ZERO


class IncompatibleFieldsError(NumerationError):
    """Quadratic operands from different fields Q(sqrt(d))"""
    category = ErrorCategory.INCOMPATIBLE_FIELDS


class EmptyInput(NumerationError):
    category = ErrorCategory.EMPTY_INPUT


class IndexBeyondDepth(NumerationError):
    """Index past the CFE-depth of a rational"""
    category = ErrorCategory.INDEX_BEYOND_DEPTH


class EqualEndpoints(NumerationError):
    category = ErrorCategory.EQUAL_ENDPOINTS


class NotAdmissible(NumerationError):
    """Digit word violating the admissibility conditions"""
    category = ErrorCategory.NOT_ADMISSIBLE


class OutOfRange(DomainError):
    """Integer outside the numeration range of a rational base"""
    category = ErrorCategory.OUT_OF_RANGE


class NotGridPoint(DomainError):
    """Real that is not a multiple of 1/q for a rational base p/q"""
    category = ErrorCategory.NOT_GRID_POINT


class IncomparableStreams(NumerationError):
    category = ErrorCategory.INCOMPARABLE_STREAMS


class NotConvertible(NumerationError):
    """Improper expansion with no proper equivalent"""
    category = ErrorCategory.NOT_CONVERTIBLE


class UnsupportedTail(NumerationError):
    category = ErrorCategory.UNSUPPORTED_TAIL


class ZeroWord(NumerationError):
    category = ErrorCategory.ZERO_WORD


class NoSuccessor(NumerationError):
    category = ErrorCategory.NO_SUCCESSOR


class TooLarge(NumerationError):
    """Instance beyond the configured brute-force limits"""
    category = ErrorCategory.TOO_LARGE


class NonTerminatingStream(NumerationError):
    category = ErrorCategory.NON_TERMINATING


class ExpressionParseError(NumerationError):
    """Unparsable user input; the message names the offending token"""
    category = ErrorCategory.PARSE


class OracleMismatch(NumerationError):
    """Two independent computations of the same quantity disagree"""
    category = ErrorCategory.ORACLE_MISMATCH


@dataclass
class ErrorRecord:
    """Detailed error information for tracking and reporting"""
    category: ErrorCategory
    operation: str
    instance: str
    error_message: str
    timestamp: datetime = None

    def __post_init__(self):
        if self.timestamp is None:
            self.timestamp = datetime.now()


class ErrorHandler:
    """
    Collects failures raised while sweeping many instances
    """

    def __init__(self):
        self.errors: List[ErrorRecord] = []
        self.error_counts: Dict[ErrorCategory, int] = {cat: 0 for cat in ErrorCategory}
        self.logger = structlog.get_logger(__name__)

    def record_exception(self, exc: BaseException, operation: str,
                         instance: Any = "") -> ErrorRecord:
        """Record an exception raised by ``operation`` on ``instance``"""
        category = getattr(exc, "category", ErrorCategory.UNKNOWN)
        if not isinstance(category, ErrorCategory):
            category = ErrorCategory.UNKNOWN

        error = ErrorRecord(
            category=category,
            operation=operation,
            instance=str(instance),
            error_message=str(exc) or type(exc).__name__
        )
        self._log_error(error)
        return error

    def record_mismatch(self, operation: str, instance: Any,
                        expected: Any, actual: Any) -> ErrorRecord:
        """Record a disagreement between a formula and its oracle"""
        error = ErrorRecord(
            category=ErrorCategory.ORACLE_MISMATCH,
            operation=operation,
            instance=str(instance),
            error_message=f"expected {expected}, got {actual}"
        )
        self._log_error(error)
        return error

    def _log_error(self, error: ErrorRecord):
        """Log error and update counters"""

        self.errors.append(error)
        self.error_counts[error.category] += 1

        # Log with structured logging
        self.logger.warning(
            "numeration_error",
            category=error.category.value,
            operation=error.operation,
            instance=error.instance,
            error_message=error.error_message
        )

    def get_error_summary(self) -> Dict[str, Any]:
        """Generate error summary"""

        total_errors = len(self.errors)

        if total_errors == 0:
            return {
                "total_errors": 0,
                "categories": {},
                "summary": "No errors encountered"
            }

        # Error breakdown by category
        category_breakdown = {}
        for category, count in self.error_counts.items():
            if count > 0:
                category_breakdown[category.value] = {
                    "count": count,
                    "percentage": round((count / total_errors) * 100, 1)
                }

        # Most common errors
        error_messages = {}
        for error in self.errors:
            key = f"{error.category.value}_{error.operation}"
            if key not in error_messages:
                error_messages[key] = {
                    "category": error.category.value,
                    "operation": error.operation,
                    "count": 0,
                    "example_instance": error.instance,
                    "example_message": error.error_message
                }
            error_messages[key]["count"] += 1

        sorted_errors = sorted(error_messages.values(),
                               key=lambda x: x["count"], reverse=True)

        return {
            "total_errors": total_errors,
            "error_breakdown_by_category": category_breakdown,
            "most_common_errors": sorted_errors[:10]
        }

    def clear(self):
        self.errors.clear()
        self.error_counts = {cat: 0 for cat in ErrorCategory}
