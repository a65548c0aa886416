"""
Bayes' Theorem and the extended Bayes' Theorem.

For evidence A_1..A_n that is conditionally independent under every cell
B_k of a partition:

    P(B_k | ∩A_i) = P(B_k) Π_i P(A_i|B_k) / Σ_j P(B_j) Π_i P(A_i|B_j)

The conditional independence assumption is the caller's; nothing here can
check it.
"""
import logging
from math import prod
from typing import Sequence

import numpy as np
from django.conf import settings
from scipy.special import logsumexp

from .domain import LikelihoodMatrix, PartitionModel, PosteriorDistribution
from .exceptions import DimensionMismatchError, ZeroEvidenceError
from .validators import LikelihoodValidator

logger = logging.getLogger(__name__)


def _ascending_sum(values: np.ndarray) -> float:
    total = 0.0
    for value in values:
        total += float(value)
    return total


def _log_space_masses(priors: np.ndarray, sorted_rows: np.ndarray) -> np.ndarray:
    with np.errstate(divide='ignore'):
        log_joint = np.log(priors) + np.sum(np.log(sorted_rows), axis=0)

    if np.all(np.isneginf(log_joint)):
        raise ZeroEvidenceError()

    return np.exp(log_joint - logsumexp(log_joint))


def posterior_masses(priors: Sequence[float], rows) -> np.ndarray:
    """
    Posterior masses for non-negative priors and an n x m likelihood grid.

    Each cell's factors are multiplied in ascending order and the evidence
    sum runs over k = 1..m, so permuting rows cannot change a single bit.
    """
    priors = np.asarray(priors, dtype=float)
    rows = np.asarray(rows, dtype=float).reshape(-1, priors.shape[0])

    if rows.shape[0] == 0:
        return priors / _ascending_sum(priors)

    sorted_rows = np.sort(rows, axis=0)

    if rows.shape[0] > settings.DXBAYES['LOG_SPACE_THRESHOLD']:
        return _log_space_masses(priors, sorted_rows)

    joint = priors * np.prod(sorted_rows, axis=0)
    evidence = _ascending_sum(joint)

    if evidence == 0.0:
        reachable = (priors > 0) & np.all(sorted_rows > 0, axis=0)
        if np.any(reachable):
            logger.debug(f"Direct products underflowed for {rows.shape[0]} rows, retrying in log space")
            return _log_space_masses(priors, sorted_rows)
        raise ZeroEvidenceError()

    return joint / evidence


def evidence_probability(priors: Sequence, rows: Sequence[Sequence]):
    """
    P(∩A_i) = Σ_k P(B_k) Π_i P(A_i|B_k).

    Plain arithmetic, so exact when given ``Fraction`` values.
    """
    return sum(
        prior * prod(row[k] for row in rows)
        for k, prior in enumerate(priors)
    )


def independent_evidence_probability(priors: Sequence, rows: Sequence[Sequence]):
    """
    Π_i Σ_k P(A_i|B_k) P(B_k).

    This equals P(∩A_i) only when the A_i are unconditionally independent,
    which conditional independence does not imply.
    """
    return prod(
        sum(row[k] * prior for k, prior in enumerate(priors))
        for row in rows
    )


def extended_bayes(model: PartitionModel, likelihoods: LikelihoodMatrix) -> PosteriorDistribution:
    """Posterior over the partition given every row of evidence."""
    if likelihoods.n_cells != model.size:
        raise DimensionMismatchError(model.size, likelihoods.n_cells)

    masses = posterior_masses(model.priors, likelihoods.values)
    return PosteriorDistribution(labels=model.labels, masses=tuple(masses))


def bayes_posterior(model: PartitionModel, likelihood_row: Sequence[float]) -> PosteriorDistribution:
    """Posterior over the partition given a single piece of evidence."""
    LikelihoodValidator.validate_row(likelihood_row, model.size)
    return extended_bayes(model, LikelihoodMatrix.from_rows([likelihood_row]))


def sequential_update(current: PosteriorDistribution, likelihood_row: Sequence[float]) -> PosteriorDistribution:
    """Fold one more row of evidence into an existing posterior."""
    LikelihoodValidator.validate_row(likelihood_row, len(current.labels))
    masses = posterior_masses(current.masses, [likelihood_row])
    return PosteriorDistribution(labels=current.labels, masses=tuple(masses))
