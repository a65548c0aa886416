"""
Custom exceptions for reports app with error codes.
"""
from typing import Any, Dict, Optional

from django.core.exceptions import ValidationError


class ReportsBusinessError(ValidationError):
    """Base exception for data files and reports with error code."""

    # Exit status of the command line for this error
    exit_code = 1

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


class RegionParseError(ReportsBusinessError):
    """Raised when a region file cannot be parsed."""

    def __init__(self, line: int, reason: str) -> None:
        self.line = line
        message = f'Region file line {line}: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_REGION_PARSE",
            errors={'input': [message]}
        )


class RegionDomainError(ReportsBusinessError):
    """Raised when a region row holds a value outside its domain."""

    def __init__(self, reason: str, line: Optional[int] = None) -> None:
        self.line = line
        message = f'Region file line {line}: {reason}' if line is not None else f'Invalid region: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_REGION_DOMAIN",
            errors={'input': [message]}
        )


class TableRowError(ReportsBusinessError):
    """Raised when a table row cannot be computed."""

    def __init__(self, region: str, reason: str) -> None:
        self.region = region
        message = f'Row {region!r}: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_TABLE_ROW",
            errors={'rows': [message]}
        )


class TableProfileError(ReportsBusinessError):
    """Raised when a profile cannot produce a monotone table."""

    def __init__(self, reason: str) -> None:
        message = f'Invalid table profile: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_TABLE_PROFILE",
            errors={'profile': [message]}
        )


class ScenarioSchemaError(ReportsBusinessError):
    """Raised when a scenario file does not match the schema."""

    exit_code = 2

    def __init__(self, reason: str, errors: Optional[Dict[str, Any]] = None) -> None:
        message = f'Scenario schema error: {reason}'
        super().__init__(
            message=message,
            error_code="ERROR_SCENARIO_SCHEMA",
            errors=errors or {'scenario': [message]}
        )


class ScenarioExecutionError(ReportsBusinessError):
    """Raised when a valid scenario fails while running."""

    def __init__(self, scenario: str, reason: str, error_code: str = "ERROR_SCENARIO_EXECUTION") -> None:
        message = f'Scenario {scenario!r} failed: {reason}'
        super().__init__(
            message=message,
            error_code=error_code,
            errors={'scenario': [message]}
        )
