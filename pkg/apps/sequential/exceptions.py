"""
Custom exceptions for sequential app with error codes.
"""
from typing import Any, Dict, Optional

from django.core.exceptions import ValidationError


class SequentialBusinessError(ValidationError):
    """Base exception for the stopping rule with error code."""

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


class ChainViolationError(SequentialBusinessError):
    """Raised when thresholds break 0 < α_1 ≤ α_2 ≤ … ≤ β_1 ≤ β_2 ≤ … < 1."""

    def __init__(self, index: int, detail: str) -> None:
        self.index = index
        message = f'Threshold chain violated at n={index}: {detail}.'
        super().__init__(
            message=message,
            error_code="ERROR_CHAIN_VIOLATION",
            errors={'schedule': [message]}
        )


class InvalidScheduleError(SequentialBusinessError):
    """Raised when a schedule or stopping configuration is malformed."""

    def __init__(self, reason: str, field: str = 'schedule') -> None:
        message = f'Invalid stopping rule: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_SCHEDULE",
            errors={field: [message]}
        )


class SessionStoppedError(SequentialBusinessError):
    """Raised when stepping a session that has already stopped."""

    def __init__(self, status: str) -> None:
        message = f'Session already stopped with status {status!r}; no further tests are applied.'
        super().__init__(
            message=message,
            error_code="ERROR_SESSION_STOPPED",
            errors={'status': [message]}
        )


class InvalidSimulationError(SequentialBusinessError):
    """Raised when simulation parameters are out of range."""

    def __init__(self, reason: str, field: str = 'trials') -> None:
        message = f'Invalid simulation request: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_SIMULATION",
            errors={field: [message]}
        )
