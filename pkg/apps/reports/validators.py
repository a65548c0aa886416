"""
Validators for region data.
"""
import math
from typing import Optional

from .exceptions import RegionDomainError


class RegionValidator:
    """Validator for region records."""

    @staticmethod
    def validate_name(region: str, line: Optional[int] = None) -> None:
        if not region or not region.strip():
            raise RegionDomainError('region name is empty', line)

    @staticmethod
    def validate_prevalence(prevalence: float, line: Optional[int] = None) -> None:
        """Validate that prevalence lies strictly between 0 and 1."""
        if not math.isfinite(prevalence) or not 0.0 < prevalence < 1.0:
            raise RegionDomainError(f'prevalence {prevalence!r} is not in (0, 1)', line)
