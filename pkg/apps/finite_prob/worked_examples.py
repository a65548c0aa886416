"""
Five small spaces separating independence from conditional independence,
with their stated probabilities.

In the space conditionally independent given B only, the complement
probabilities are stated against B'.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple

from .domain import Event, PairClassification, SampleSpace


@dataclass(frozen=True)
class WorkedExample:
    """One example: the events, stated probabilities and expected classification."""

    name: str
    space_size: int
    a1: FrozenSet[int]
    a2: FrozenSet[int]
    b: FrozenSet[int]
    classification: PairClassification
    # Keys are PairProbabilities field names.
    stated: Dict[str, Fraction] = field(default_factory=dict)

    def build(self) -> Tuple[SampleSpace, Event, Event, Event]:
        space = SampleSpace.of_size(self.space_size)
        return space, space.event(self.a1), space.event(self.a2), space.event(self.b)


F = Fraction

WORKED_EXAMPLES: Tuple[WorkedExample, ...] = (
    WorkedExample(
        name='independent-not-conditionally',
        space_size=6,
        a1=frozenset({1, 2, 3}),
        a2=frozenset({2, 4}),
        b=frozenset({1, 3, 4}),
        classification=PairClassification(
            independent=True, ci_given_b=False, ci_given_b_complement=False,
        ),
        stated={
            'p_a1': F(1, 2),
            'p_a2': F(1, 3),
            'p_a1_a2': F(1, 6),
            'p_a1_given_b': F(2, 3),
            'p_a2_given_b': F(1, 3),
            'p_a1_a2_given_b': F(0),
        },
    ),
    WorkedExample(
        name='dependent-conditionally-independent',
        space_size=8,
        a1=frozenset({1, 2, 3}),
        a2=frozenset({2, 4}),
        b=frozenset(range(1, 7)),
        classification=PairClassification(
            independent=False, ci_given_b=True, ci_given_b_complement=True,
        ),
        stated={
            'p_a1': F(3, 8),
            'p_a2': F(1, 4),
            'p_a1_a2': F(1, 8),
            'p_a1_given_b': F(1, 2),
            'p_a2_given_b': F(1, 3),
            'p_a1_a2_given_b': F(1, 6),
        },
    ),
    WorkedExample(
        name='conditionally-independent-given-b-only',
        space_size=8,
        a1=frozenset({1, 3, 5, 7}),
        a2=frozenset({2, 5, 8}),
        b=frozenset(range(1, 7)),
        classification=PairClassification(
            independent=False, ci_given_b=True, ci_given_b_complement=False,
        ),
        stated={
            'p_a1_given_b': F(1, 2),
            'p_a2_given_b': F(1, 3),
            'p_a1_a2_given_b': F(1, 6),
            'p_a1_given_b_complement': F(1, 2),
            'p_a2_given_b_complement': F(1, 2),
            'p_a1_a2_given_b_complement': F(0),
        },
    ),
    WorkedExample(
        name='independent-and-conditionally-given-b',
        space_size=16,
        a1=frozenset(range(1, 13)),
        a2=frozenset({1, 2, 3, 4, 5, 6, 15, 16}),
        b=frozenset({6, 7, 8, 13, 14, 15}),
        classification=PairClassification(
            independent=True, ci_given_b=True, ci_given_b_complement=False,
        ),
        stated={
            'p_a1': F(3, 4),
            'p_a2': F(1, 2),
            'p_a1_a2': F(3, 8),
            'p_a1_given_b': F(1, 2),
            'p_a2_given_b': F(1, 3),
            'p_a1_a2_given_b': F(1, 6),
            'p_a1_given_b_complement': F(9, 10),
            'p_a2_given_b_complement': F(3, 5),
            'p_a1_a2_given_b_complement': F(1, 2),
        },
    ),
    WorkedExample(
        name='dependent-conditionally-independent-wide',
        space_size=14,
        a1=frozenset({1, 2, 3, 9, 10, 11, 12, 13, 14}),
        a2=frozenset({1, 6, 7, 12, 13, 14}),
        b=frozenset(range(1, 7)),
        classification=PairClassification(
            independent=False, ci_given_b=True, ci_given_b_complement=True,
        ),
        stated={
            'p_a1': F(9, 14),
            'p_a2': F(3, 7),
            'p_a1_a2': F(2, 7),
            'p_a1_given_b': F(1, 2),
            'p_a2_given_b': F(1, 3),
            'p_a1_a2_given_b': F(1, 6),
            'p_a1_given_b_complement': F(3, 4),
            'p_a2_given_b_complement': F(1, 2),
            'p_a1_a2_given_b_complement': F(3, 8),
        },
    ),
)


def get_worked_example(name: str) -> WorkedExample:
    for example in WORKED_EXAMPLES:
        if example.name == name:
            return example
    raise KeyError(name)
