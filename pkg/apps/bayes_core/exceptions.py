"""
Custom exceptions for bayes-core app with error codes.
"""
from typing import Any, Dict, Optional

from django.core.exceptions import ValidationError


class BayesCoreBusinessError(ValidationError):
    """Base exception for Bayes computations with error code."""

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


class InvalidPartitionError(BayesCoreBusinessError):
    """Raised when partition labels or priors break the partition rules."""

    def __init__(self, reason: str, field: str = 'priors') -> None:
        message = f'Invalid partition: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_PARTITION",
            errors={field: [message]}
        )


class InvalidLikelihoodError(BayesCoreBusinessError):
    """Raised when a likelihood entry is not a probability."""

    def __init__(self, reason: str) -> None:
        message = f'Invalid likelihood: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_LIKELIHOOD",
            errors={'likelihoods': [message]}
        )


class DimensionMismatchError(BayesCoreBusinessError):
    """Raised when likelihood rows do not match the partition size."""

    def __init__(self, expected: int, actual: int) -> None:
        message = f'Likelihood rows must have {expected} entries (one per partition cell), got {actual}.'
        super().__init__(
            message=message,
            error_code="ERROR_DIMENSION_MISMATCH",
            errors={'likelihoods': [message]}
        )


class ZeroEvidenceError(BayesCoreBusinessError):
    """Raised when the observed evidence has probability zero under the model."""

    def __init__(self) -> None:
        message = 'The evidence has probability zero under the model; the posterior is undefined.'
        super().__init__(
            message=message,
            error_code="ERROR_ZERO_EVIDENCE",
            errors={'likelihoods': [message]}
        )
