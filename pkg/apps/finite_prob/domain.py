"""
Domain types for finite equally-likely sample spaces.

Every value is immutable; probabilities are ``fractions.Fraction``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Hashable, Iterable, Tuple

from .validators import SampleSpaceValidator


@dataclass(frozen=True)
class SampleSpace:
    """Finite set of outcomes, each with probability 1/|S|."""

    outcomes: Tuple[Hashable, ...] = field(compare=False)
    members: FrozenSet[Hashable] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        outcomes = tuple(self.outcomes)
        SampleSpaceValidator.validate_outcomes(outcomes)
        object.__setattr__(self, 'outcomes', outcomes)
        object.__setattr__(self, 'members', frozenset(outcomes))

    @classmethod
    def of_size(cls, size: int) -> 'SampleSpace':
        """Space with outcomes 1..size."""
        return cls(tuple(range(1, size + 1)))

    def __len__(self) -> int:
        return len(self.outcomes)

    @property
    def atom(self) -> Fraction:
        return Fraction(1, len(self.outcomes))

    def event(self, members: Iterable[Hashable]) -> 'Event':
        return Event(self, frozenset(members))

    def whole(self) -> 'Event':
        return Event(self, self.members)

    def empty(self) -> 'Event':
        return Event(self, frozenset())

    def complement(self, event: 'Event') -> 'Event':
        SampleSpaceValidator.validate_belongs(self, event)
        return event.complement()


@dataclass(frozen=True)
class Event:
    """Subset of a sample space's outcomes."""

    space: SampleSpace
    members: FrozenSet[Hashable]

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        SampleSpaceValidator.validate_members(self.space, members)
        object.__setattr__(self, 'members', members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_empty(self) -> bool:
        return not self.members

    def complement(self) -> 'Event':
        return Event(self.space, self.space.members - self.members)

    def __and__(self, other: 'Event') -> 'Event':
        SampleSpaceValidator.validate_belongs(self.space, other)
        return Event(self.space, self.members & other.members)

    def __or__(self, other: 'Event') -> 'Event':
        SampleSpaceValidator.validate_belongs(self.space, other)
        return Event(self.space, self.members | other.members)


@dataclass(frozen=True)
class PairClassification:
    """Exact truth values of the three definitional equations for (A1, A2, B)."""

    independent: bool
    ci_given_b: bool
    ci_given_b_complement: bool


@dataclass(frozen=True)
class PairProbabilities:
    """The nine probabilities behind a PairClassification."""

    p_a1: Fraction
    p_a2: Fraction
    p_a1_a2: Fraction
    p_a1_given_b: Fraction
    p_a2_given_b: Fraction
    p_a1_a2_given_b: Fraction
    p_a1_given_b_complement: Fraction
    p_a2_given_b_complement: Fraction
    p_a1_a2_given_b_complement: Fraction


@dataclass(frozen=True)
class Witness:
    """A family of events on a space together with a conditioning event."""

    space: SampleSpace
    events: Tuple[Event, ...]
    condition: Event
