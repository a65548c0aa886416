"""
Validators for partitions, likelihoods and posterior masses.
"""
import math
from typing import Any, Sequence

from django.conf import settings

from .exceptions import DimensionMismatchError, InvalidLikelihoodError, InvalidPartitionError


def is_probability(value: Any) -> bool:
    """True for a finite real number in [0, 1]."""
    try:
        number = float(value)
    except (TypeError, ValueError):
        return False
    return math.isfinite(number) and 0.0 <= number <= 1.0


def normalization_tolerance() -> float:
    return settings.DXBAYES['NORMALIZATION_TOLERANCE']


class PartitionValidator:
    """Validator for partition models and posterior masses."""

    @staticmethod
    def validate_labels(labels: Sequence[str]) -> None:
        """Validate that there are at least two distinct labels."""
        if len(labels) < 2:
            raise InvalidPartitionError('a partition needs at least two cells', field='labels')

        if len(set(labels)) != len(labels):
            raise InvalidPartitionError('cell labels must be unique', field='labels')

    @staticmethod
    def validate_priors(labels: Sequence[str], priors: Sequence[float]) -> None:
        """Validate that priors are strictly positive and sum to one."""
        if len(priors) != len(labels):
            raise InvalidPartitionError(f'expected {len(labels)} priors, got {len(priors)}')

        for label, prior in zip(labels, priors):
            if not is_probability(prior) or prior <= 0:
                raise InvalidPartitionError(f'prior of {label!r} must be in (0, 1], got {prior}')

        total = math.fsum(priors)
        if abs(total - 1.0) > normalization_tolerance():
            raise InvalidPartitionError(f'priors must sum to 1, got {total!r}')

    @staticmethod
    def validate_masses(labels: Sequence[str], masses: Sequence[float]) -> None:
        """Validate that posterior masses form a probability vector."""
        if len(masses) != len(labels):
            raise InvalidPartitionError(f'expected {len(labels)} masses, got {len(masses)}', field='masses')

        if not all(is_probability(mass) for mass in masses):
            raise InvalidPartitionError('every mass must lie in [0, 1]', field='masses')

        total = math.fsum(masses)
        if abs(total - 1.0) > normalization_tolerance():
            raise InvalidPartitionError(f'masses must sum to 1, got {total!r}', field='masses')


class LikelihoodValidator:
    """Validator for likelihood rows and matrices."""

    @staticmethod
    def validate_row(row: Sequence[float], width: int) -> None:
        """Validate one evidence row against the partition size."""
        if len(row) != width:
            raise DimensionMismatchError(width, len(row))

        for value in row:
            if not is_probability(value):
                raise InvalidLikelihoodError(f'entry {value!r} is not in [0, 1]')

    @staticmethod
    def validate_shape(rows: int, columns: int) -> None:
        if rows < 1:
            raise InvalidLikelihoodError('at least one evidence row is required')

        if columns < 1:
            raise InvalidLikelihoodError('rows must not be empty')
