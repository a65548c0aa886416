"""
Value objects for Bayes computations over a finite partition.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from .exceptions import InvalidLikelihoodError
from .validators import LikelihoodValidator, PartitionValidator


@dataclass(frozen=True)
class PartitionModel:
    """Cells B_1..B_m of a partition with their prior probabilities."""

    labels: Tuple[str, ...]
    priors: Tuple[float, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        priors = tuple(float(p) for p in self.priors)
        PartitionValidator.validate_labels(labels)
        PartitionValidator.validate_priors(labels, priors)

        total = math.fsum(priors)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'priors', tuple(p / total for p in priors))

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, eq=False)
class LikelihoodMatrix:
    """
    Evidence likelihoods, one row per piece of evidence A_i and one column
    per partition cell: entry (i, k) is P(A_i | B_k).
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim != 2:
            raise InvalidLikelihoodError('likelihoods must be a grid of rows and columns')
        LikelihoodValidator.validate_shape(values.shape[0], values.shape[1])
        for row in values:
            LikelihoodValidator.validate_row(row, values.shape[1])
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[float]]) -> 'LikelihoodMatrix':
        rows = [list(row) for row in rows]
        if not rows:
            LikelihoodValidator.validate_shape(0, 0)
        width = len(rows[0])
        for row in rows:
            LikelihoodValidator.validate_row(row, width)
        return cls(np.array(rows, dtype=float))

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_cells(self) -> int:
        return self.values.shape[1]

    def rows(self) -> Tuple[Tuple[float, ...], ...]:
        return tuple(tuple(float(v) for v in row) for row in self.values)


@dataclass(frozen=True)
class PosteriorDistribution:
    """Posterior masses over the cells of a partition."""

    labels: Tuple[str, ...]
    masses: Tuple[float, ...] = field()

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        masses = tuple(float(m) for m in self.masses)
        PartitionValidator.validate_masses(labels, masses)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'masses', masses)

    def mass(self, label: str) -> float:
        return self.masses[self.labels.index(label)]

    def as_dict(self) -> Dict[str, float]:
        return dict(zip(self.labels, self.masses))
