"""
Enumeration helpers and exhaustive witness searches over small spaces.
"""
import logging
from itertools import combinations
from typing import Iterator, Optional, Tuple

from .constants import IndependenceMode
from .domain import Event, SampleSpace, Witness
from .services import is_conditionally_independent_many, theorem1_premises_hold

logger = logging.getLogger(__name__)

VENN_REGIONS = 8


def iter_events(space: SampleSpace) -> Iterator[Event]:
    """Every subset of the space, smallest first."""
    for size in range(len(space) + 1):
        for members in combinations(space.outcomes, size):
            yield space.event(members)


def iter_venn_triples(size: int) -> Iterator[Tuple[SampleSpace, Event, Event, Event]]:
    """
    One (a1, a2, b) per way of distributing ``size`` outcomes over the eight
    Venn regions of three events.

    Region r holds outcomes in a1 iff bit 0 of r is set, in a2 iff bit 1 is
    set, and in b iff bit 2 is set. Every triple on a space of this size is a
    relabelling of exactly one yielded triple.
    """
    space = SampleSpace.of_size(size)
    slots = size + VENN_REGIONS - 1

    for bars in combinations(range(slots), VENN_REGIONS - 1):
        counts = []
        previous = -1
        for bar in bars:
            counts.append(bar - previous - 1)
            previous = bar
        counts.append(slots - previous - 1)

        a1, a2, b = set(), set(), set()
        outcome = 1
        for region, count in enumerate(counts):
            block = range(outcome, outcome + count)
            outcome += count
            if region & 1:
                a1.update(block)
            if region & 2:
                a2.update(block)
            if region & 4:
                b.update(block)
        yield space, space.event(a1), space.event(a2), space.event(b)


def find_pairwise_not_mutual_witness(
    max_size: int = 16,
    require_proper_condition: bool = False,
) -> Optional[Witness]:
    """
    Smallest three-event family that is pairwise but not mutually
    conditionally independent given b.

    Both checks only see the events inside b, so the search runs over subsets
    of b. With ``require_proper_condition`` one outcome outside b is added so
    that b is neither empty nor the whole space.
    """
    for condition_size in range(1, max_size + 1):
        space_size = condition_size + 1 if require_proper_condition else condition_size
        if space_size > max_size:
            break

        space = SampleSpace.of_size(space_size)
        condition = space.event(range(1, condition_size + 1))
        inner = SampleSpace.of_size(condition_size)
        candidates = [space.event(e.members) for e in iter_events(inner)]

        for family in combinations(candidates, 3):
            if not is_conditionally_independent_many(space, family, condition, IndependenceMode.PAIRWISE):
                continue
            if is_conditionally_independent_many(space, family, condition, IndependenceMode.MUTUAL):
                continue
            logger.debug(f"Pairwise-not-mutual witness found on a space of size {space_size}")
            return Witness(space=space, events=tuple(family), condition=condition)
    return None


def _is_proper(space: SampleSpace, event: Event) -> bool:
    return 0 < len(event) < len(space)


def find_theorem1_witness(max_size: int = 12) -> Optional[Witness]:
    """
    Smallest triple of proper, non-empty events on which a1 is independent of
    both b and a2 ∩ b.
    """
    for size in range(2, max_size + 1):
        for space, a1, a2, b in iter_venn_triples(size):
            if not all(_is_proper(space, event) for event in (a1, a2, b)):
                continue
            if theorem1_premises_hold(space, a1, a2, b):
                logger.debug(f"Premise witness found on a space of size {size}")
                return Witness(space=space, events=(a1, a2), condition=b)
    return None
