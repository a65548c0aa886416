"""
Independence and conditional independence on finite equally-likely spaces.

All arithmetic is exact. The product form is the canonical
independence test, so no positivity is needed for unconditional checks;
conditional checks need a non-empty conditioning event.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Sequence

from django.conf import settings

from .constants import IndependenceMode
from .domain import Event, PairClassification, PairProbabilities, SampleSpace
from .exceptions import EventArityError
from .validators import SampleSpaceValidator

logger = logging.getLogger(__name__)


def probability(space: SampleSpace, a: Event) -> Fraction:
    """P(a) = |a| / |S|."""
    SampleSpaceValidator.validate_belongs(space, a)
    return Fraction(len(a), len(space))


def conditional_probability(space: SampleSpace, a: Event, b: Event) -> Fraction:
    """P(a | b) = |a ∩ b| / |b|."""
    SampleSpaceValidator.validate_belongs(space, a, b)
    SampleSpaceValidator.validate_condition(b)
    return Fraction(len(a & b), len(b))


def is_independent(space: SampleSpace, a1: Event, a2: Event) -> bool:
    """P(a1 ∩ a2) == P(a1) · P(a2)."""
    SampleSpaceValidator.validate_belongs(space, a1, a2)
    return probability(space, a1 & a2) == probability(space, a1) * probability(space, a2)


def is_conditionally_independent(space: SampleSpace, a1: Event, a2: Event, b: Event) -> bool:
    """P(a1 ∩ a2 | b) == P(a1 | b) · P(a2 | b)."""
    SampleSpaceValidator.validate_belongs(space, a1, a2, b)
    SampleSpaceValidator.validate_condition(b)
    joint = conditional_probability(space, a1 & a2, b)
    return joint == conditional_probability(space, a1, b) * conditional_probability(space, a2, b)


def is_conditionally_independent_many(
    space: SampleSpace,
    events: Sequence[Event],
    b: Event,
    mode: str = IndependenceMode.MUTUAL,
) -> bool:
    """
    Check a family of events for conditional independence given b.

    Pairwise mode checks every pair; mutual mode checks the product rule on
    every index subset of size two or more (2^n - n - 1 equations).
    """
    maximum = settings.DXBAYES['MAX_CI_EVENTS']
    if not 2 <= len(events) <= maximum:
        raise EventArityError(len(events), 2, maximum)

    SampleSpaceValidator.validate_belongs(space, *events, b)
    SampleSpaceValidator.validate_condition(b)

    mode = IndependenceMode(mode)
    marginals = [conditional_probability(space, event, b) for event in events]
    largest = 2 if mode == IndependenceMode.PAIRWISE else len(events)

    for size in range(2, largest + 1):
        for indices in combinations(range(len(events)), size):
            joint = events[indices[0]]
            for index in indices[1:]:
                joint = joint & events[index]
            if conditional_probability(space, joint, b) != prod(marginals[i] for i in indices):
                logger.debug(f"Product rule fails on indices {indices} ({mode} mode)")
                return False
    return True


def classify_pair(space: SampleSpace, a1: Event, a2: Event, b: Event) -> PairClassification:
    """Independence plus conditional independence given b and given b'."""
    SampleSpaceValidator.validate_belongs(space, a1, a2, b)
    b_complement = b.complement()
    SampleSpaceValidator.validate_condition(b, 'B')
    SampleSpaceValidator.validate_condition(b_complement, "B'")

    return PairClassification(
        independent=is_independent(space, a1, a2),
        ci_given_b=is_conditionally_independent(space, a1, a2, b),
        ci_given_b_complement=is_conditionally_independent(space, a1, a2, b_complement),
    )


def pair_probabilities(space: SampleSpace, a1: Event, a2: Event, b: Event) -> PairProbabilities:
    """The nine probabilities a pair classification is decided from."""
    SampleSpaceValidator.validate_belongs(space, a1, a2, b)
    b_complement = b.complement()
    SampleSpaceValidator.validate_condition(b, 'B')
    SampleSpaceValidator.validate_condition(b_complement, "B'")
    both = a1 & a2

    return PairProbabilities(
        p_a1=probability(space, a1),
        p_a2=probability(space, a2),
        p_a1_a2=probability(space, both),
        p_a1_given_b=conditional_probability(space, a1, b),
        p_a2_given_b=conditional_probability(space, a2, b),
        p_a1_a2_given_b=conditional_probability(space, both, b),
        p_a1_given_b_complement=conditional_probability(space, a1, b_complement),
        p_a2_given_b_complement=conditional_probability(space, a2, b_complement),
        p_a1_a2_given_b_complement=conditional_probability(space, both, b_complement),
    )


def theorem1_premises_hold(space: SampleSpace, a1: Event, a2: Event, b: Event) -> bool:
    """
    True iff a1 is independent of b and of a2 ∩ b.

    Whenever this holds, a1 and a2 are conditionally independent given b.
    """
    SampleSpaceValidator.validate_belongs(space, a1, a2, b)
    SampleSpaceValidator.validate_condition(b)
    return is_independent(space, a1, b) and is_independent(space, a1, a2 & b)
