"""
Validators for finite sample spaces and their events.
"""
from typing import TYPE_CHECKING, Hashable, Iterable, Tuple

from .exceptions import ForeignEventError, InvalidSampleSpaceError, ZeroConditionError

if TYPE_CHECKING:
    from .domain import Event, SampleSpace


class SampleSpaceValidator:
    """Validator for sample space and event rules."""

    @staticmethod
    def validate_outcomes(outcomes: Tuple[Hashable, ...]) -> None:
        """Validate that outcomes are non-empty and distinct."""
        if not outcomes:
            raise InvalidSampleSpaceError('a sample space needs at least one outcome')

        if len(set(outcomes)) != len(outcomes):
            raise InvalidSampleSpaceError('outcome identifiers must be distinct')

    @staticmethod
    def validate_members(space: 'SampleSpace', members: Iterable[Hashable]) -> None:
        """Validate that every member is an outcome of the space."""
        foreign = [m for m in members if m not in space.members]
        if foreign:
            raise ForeignEventError(foreign)

    @staticmethod
    def validate_belongs(space: 'SampleSpace', *events: 'Event') -> None:
        """Validate that every event was built on this space."""
        for event in events:
            if event.space != space:
                raise ForeignEventError()

    @staticmethod
    def validate_condition(condition: 'Event', label: str = 'B') -> None:
        """Validate that a conditioning event has positive probability."""
        if condition.is_empty:
            raise ZeroConditionError(label)
