"""
Custom exceptions for diagnostics app with error codes.
"""
from typing import Any, Dict, Optional

from django.core.exceptions import ValidationError


class DiagnosticsBusinessError(ValidationError):
    """Base exception for diagnostic computations with error code."""

    def __init__(
        self,
        message: str,
        error_code: str,
        errors: Optional[Dict[str, Any]] = None
    ) -> None:
        self.error_code = error_code
        self.message = message
        super().__init__(message)
        if errors:
            self.error_dict = errors


class InvalidProbabilityError(DiagnosticsBusinessError):
    """Raised when sensitivity, specificity or prevalence is not in [0, 1]."""

    def __init__(self, field: str, value: Any) -> None:
        message = f'{field} must be a probability in [0, 1], got {value!r}.'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_PROBABILITY",
            errors={field: [message]}
        )


class UndefinedPosteriorError(DiagnosticsBusinessError):
    """Raised when the observed results have probability zero under the model."""

    def __init__(self, detail: str = 'the observed results') -> None:
        message = f'Posterior is undefined: {detail} cannot occur under this model.'
        super().__init__(
            message=message,
            error_code="ERROR_UNDEFINED_POSTERIOR",
            errors={'results': [message]}
        )


class DivergenceError(DiagnosticsBusinessError):
    """Raised when repeated positives can never reach the requested confidence."""

    def __init__(self, reason: str) -> None:
        message = f'Confidence threshold is unreachable: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_DIVERGENCE",
            errors={'threshold': [message]}
        )


class InvalidThresholdError(DiagnosticsBusinessError):
    """Raised when a confidence threshold is not strictly between 0 and 1."""

    def __init__(self, threshold: Any) -> None:
        message = f'Threshold must lie strictly between 0 and 1, got {threshold!r}.'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_THRESHOLD",
            errors={'threshold': [message]}
        )


class InvalidTestCountError(DiagnosticsBusinessError):
    """Raised when a number of tests is not a positive integer."""

    def __init__(self, count: Any) -> None:
        message = f'Number of positive tests must be a positive integer, got {count!r}.'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_TEST_COUNT",
            errors={'n_positives': [message]}
        )


class InvalidResultSequenceError(DiagnosticsBusinessError):
    """Raised when a result sequence contains something other than + or -."""

    def __init__(self, symbol: str) -> None:
        message = f"Test results are written with '+' and '-', got {symbol!r}."
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_RESULTS",
            errors={'results': [message]}
        )
