"""
Custom exceptions for finite-prob app with error codes.
"""
from typing import Any, Dict, Optional

from django.core.exceptions import ValidationError


class FiniteProbBusinessError(ValidationError):
    """Base exception for finite sample space errors with error code."""

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


class InvalidSampleSpaceError(FiniteProbBusinessError):
    """Raised when a sample space is empty or repeats an outcome."""

    def __init__(self, reason: str) -> None:
        message = f'Invalid sample space: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_INVALID_SAMPLE_SPACE",
            errors={'outcomes': [message]}
        )


class ForeignEventError(FiniteProbBusinessError):
    """Raised when an event references outcomes outside the sample space."""

    def __init__(self, outcomes: Optional[list] = None) -> None:
        if outcomes:
            shown = ', '.join(repr(o) for o in outcomes[:5])
            message = f'Event references outcomes outside the sample space: {shown}.'
        else:
            message = 'Event belongs to a different sample space.'
        super().__init__(
            message=message,
            error_code="ERROR_FOREIGN_EVENT",
            errors={'event': [message]}
        )


class ZeroConditionError(FiniteProbBusinessError):
    """Raised when conditioning on an event of probability zero."""

    def __init__(self, label: str = 'B') -> None:
        message = f'Conditioning event {label} is empty; P({label}) must be positive.'
        super().__init__(
            message=message,
            error_code="ERROR_ZERO_CONDITION",
            errors={'given': [message]}
        )


class EventArityError(FiniteProbBusinessError):
    """Raised when a family of events has an unsupported size."""

    def __init__(self, count: int, minimum: int, maximum: int) -> None:
        message = (
            f'Conditional independence of a family needs between {minimum} '
            f'and {maximum} events, got {count}.'
        )
        super().__init__(
            message=message,
            error_code="ERROR_EVENT_ARITY",
            errors={'events': [message]}
        )
