"""
Validators for diagnostic inputs.
"""
from typing import Any

from apps.bayes_core.validators import is_probability

from .exceptions import InvalidProbabilityError, InvalidTestCountError, InvalidThresholdError


class DiagnosticValidator:
    """Validator for diagnostic test parameters."""

    @staticmethod
    def validate_probability(value: Any, field: str) -> None:
        """Validate that a parameter is a probability."""
        if isinstance(value, bool) or not is_probability(value):
            raise InvalidProbabilityError(field, value)

    @staticmethod
    def validate_threshold(threshold: Any) -> None:
        """Validate that a confidence threshold lies in (0, 1)."""
        if not is_probability(threshold) or threshold in (0, 1):
            raise InvalidThresholdError(threshold)

    @staticmethod
    def validate_test_count(count: Any) -> None:
        """Validate that a number of tests is a positive integer."""
        if isinstance(count, bool) or not isinstance(count, int) or count < 1:
            raise InvalidTestCountError(count)
