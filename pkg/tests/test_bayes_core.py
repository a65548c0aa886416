"""
Tests for Bayes' Theorem over partitions and the extended theorem.
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from apps.bayes_core.domain import LikelihoodMatrix, PartitionModel, PosteriorDistribution
from apps.bayes_core.exceptions import (
    DimensionMismatchError,
    InvalidLikelihoodError,
    InvalidPartitionError,
    ZeroEvidenceError,
)
from apps.bayes_core.services import (
    bayes_posterior,
    evidence_probability,
    extended_bayes,
    independent_evidence_probability,
    posterior_masses,
    sequential_update,
)
from apps.finite_prob.services import probability
from apps.finite_prob.worked_examples import get_worked_example

from .oracles import joint_posterior

DISEASE = PartitionModel(labels=('D', "D'"), priors=(0.001, 0.999))
POSITIVE = (0.95, 0.05)


def _fold(model, rows):
    current = PosteriorDistribution(labels=model.labels, masses=model.priors)
    for row in rows:
        current = sequential_update(current, row)
    return current


def _random_model(rng):
    m = int(rng.integers(2, 6))
    priors = rng.dirichlet(np.ones(m)) + 1e-3
    priors = priors / priors.sum()
    labels = tuple(f'B{k}' for k in range(1, m + 1))
    return PartitionModel(labels=labels, priors=tuple(priors))


class TestPartitionModel:
    """Tests for PartitionModel validation."""

    def test_priors_are_renormalized(self):
        model = PartitionModel(labels=('a', 'b', 'c'), priors=(0.5, 0.3, 0.2))
        assert math.fsum(model.priors) == pytest.approx(1.0, abs=1e-15)
        assert model.size == 3

    def test_single_cell_rejected(self):
        with pytest.raises(InvalidPartitionError):
            PartitionModel(labels=('a',), priors=(1.0,))

    def test_duplicate_labels_rejected(self):
        with pytest.raises(InvalidPartitionError):
            PartitionModel(labels=('a', 'a'), priors=(0.5, 0.5))

    def test_zero_prior_rejected(self):
        with pytest.raises(InvalidPartitionError) as exc_info:
            PartitionModel(labels=('a', 'b'), priors=(0.0, 1.0))
        assert exc_info.value.error_code == 'ERROR_INVALID_PARTITION'

    def test_priors_must_sum_to_one(self):
        with pytest.raises(InvalidPartitionError):
            PartitionModel(labels=('a', 'b'), priors=(0.5, 0.6))


class TestLikelihoodMatrix:
    """Tests for LikelihoodMatrix validation."""

    def test_from_rows(self):
        matrix = LikelihoodMatrix.from_rows([POSITIVE, POSITIVE])
        assert (matrix.n_rows, matrix.n_cells) == (2, 2)
        assert matrix.rows() == (POSITIVE, POSITIVE)

    def test_values_are_read_only(self):
        matrix = LikelihoodMatrix.from_rows([POSITIVE])
        with pytest.raises(ValueError):
            matrix.values[0, 0] = 0.5

    def test_entry_above_one_rejected(self):
        with pytest.raises(InvalidLikelihoodError):
            LikelihoodMatrix.from_rows([(0.5, 1.5)])

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatchError):
            LikelihoodMatrix.from_rows([(0.5, 0.5), (0.5,)])

    def test_no_rows_rejected(self):
        with pytest.raises(InvalidLikelihoodError):
            LikelihoodMatrix.from_rows([])


class TestBayesPosterior:
    """Tests for bayes_posterior."""

    def test_single_positive(self):
        posterior = bayes_posterior(DISEASE, POSITIVE)
        assert round(posterior.mass('D'), 3) == 0.019

    def test_uniform_prior_constant_row(self):
        model = PartitionModel(labels=('a', 'b', 'c', 'd'), priors=(0.25,) * 4)
        posterior = bayes_posterior(model, (0.3,) * 4)
        assert posterior.masses == pytest.approx((0.25,) * 4, abs=1e-15)

    def test_three_cells_against_joint_table(self):
        model = PartitionModel(labels=('x', 'y', 'z'), priors=(0.5, 0.3, 0.2))
        posterior = bayes_posterior(model, (0.2, 0.5, 0.9))
        assert posterior.masses == pytest.approx(joint_posterior(model.priors, [(0.2, 0.5, 0.9)]), abs=1e-15)

    def test_zero_evidence(self):
        with pytest.raises(ZeroEvidenceError) as exc_info:
            bayes_posterior(DISEASE, (0.0, 0.0))
        assert exc_info.value.error_code == 'ERROR_ZERO_EVIDENCE'

    def test_row_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            bayes_posterior(DISEASE, (0.5, 0.5, 0.5))

    def test_as_dict(self):
        posterior = bayes_posterior(DISEASE, (1.0, 1.0))
        assert set(posterior.as_dict()) == {'D', "D'"}


class TestExtendedBayes:
    """Tests for extended_bayes."""

    def test_two_positives(self):
        posterior = extended_bayes(DISEASE, LikelihoodMatrix.from_rows([POSITIVE, POSITIVE]))
        assert round(posterior.mass('D'), 3) == 0.265

    def test_single_row_matches_bayes_posterior(self):
        row = (0.7, 0.2)
        assert extended_bayes(DISEASE, LikelihoodMatrix.from_rows([row])) == bayes_posterior(DISEASE, row)

    def test_mixed_rows_against_exact_evaluation(self):
        rows = [(0.9, 0.3), (0.2, 0.6), (0.75, 0.5)]
        posterior = extended_bayes(DISEASE, LikelihoodMatrix.from_rows(rows))
        assert posterior.masses == pytest.approx(joint_posterior(DISEASE.priors, rows), abs=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            extended_bayes(DISEASE, LikelihoodMatrix.from_rows([(0.1, 0.2, 0.3)]))

    def test_zero_evidence_when_every_product_vanishes(self):
        rows = [(0.0, 0.5), (0.5, 0.0)]
        with pytest.raises(ZeroEvidenceError):
            extended_bayes(DISEASE, LikelihoodMatrix.from_rows(rows))

    def test_many_rows_use_log_space(self):
        rows = [(0.6, 0.4)] * 20 + [(0.3, 0.35)] * 20
        posterior = extended_bayes(DISEASE, LikelihoodMatrix.from_rows(rows))
        assert posterior.masses == pytest.approx(joint_posterior(DISEASE.priors, rows), abs=1e-12)

    def test_underflow_retries_in_log_space(self):
        rows = [(1e-40, 2e-40)] * 10
        posterior = extended_bayes(DISEASE, LikelihoodMatrix.from_rows(rows))
        assert posterior.masses == pytest.approx(joint_posterior(DISEASE.priors, rows), abs=1e-12)

    def test_prior_dominance(self):
        model = PartitionModel(labels=('a', 'b'), priors=(1 - 1e-9, 1e-9))
        rows = [(0.4, 0.4), (0.9, 0.9), (0.05, 0.05)]
        posterior = extended_bayes(model, LikelihoodMatrix.from_rows(rows))
        assert posterior.masses == pytest.approx(model.priors, abs=1e-12)


class TestSequentialUpdate:
    """Tests for sequential_update."""

    def test_two_positives(self):
        assert round(_fold(DISEASE, [POSITIVE] * 2).mass('D'), 3) == 0.265

    def test_four_positives(self):
        assert round(_fold(DISEASE, [POSITIVE] * 4).mass('D'), 3) == 0.992

    def test_uninformative_row(self):
        start = PosteriorDistribution(labels=('a', 'b', 'c'), masses=(0.2, 0.3, 0.5))
        updated = sequential_update(start, (1.0, 1.0, 1.0))
        assert updated.masses == pytest.approx(start.masses, abs=1e-15)

    def test_zero_current_mass_stays_zero(self):
        start = PosteriorDistribution(labels=('a', 'b'), masses=(0.0, 1.0))
        assert sequential_update(start, (0.9, 0.1)).masses == (0.0, 1.0)


class TestRandomizedProperties:
    """Seeded random models, m <= 5 cells and n <= 8 rows."""

    CASES = 10_000

    def test_fold_matches_batch(self):
        rng = np.random.default_rng(2024)
        for _ in range(self.CASES):
            model = _random_model(rng)
            rows = rng.uniform(0.0, 1.0, size=(int(rng.integers(1, 9)), model.size))
            batch = extended_bayes(model, LikelihoodMatrix(rows))
            fold = _fold(model, rows.tolist())

            assert np.max(np.abs(np.subtract(batch.masses, fold.masses))) <= 1e-12
            assert abs(math.fsum(batch.masses) - 1.0) <= 1e-12

    def test_row_permutation_is_bit_exact(self):
        rng = np.random.default_rng(99)
        for _ in range(2_000):
            model = _random_model(rng)
            rows = rng.uniform(0.0, 1.0, size=(int(rng.integers(2, 9)), model.size))
            shuffled = rows[rng.permutation(rows.shape[0])]

            original = extended_bayes(model, LikelihoodMatrix(rows))
            permuted = extended_bayes(model, LikelihoodMatrix(shuffled))
            assert original.masses == permuted.masses

    def test_kernel_accepts_zero_priors(self):
        masses = posterior_masses((0.0, 1.0), [(0.9, 0.2)])
        assert masses.tolist() == [0.0, 1.0]


class TestEvidenceDenominators:
    """The evidence under conditional independence is not a product of marginals."""

    def test_exact_denominators_differ(self):
        priors = (Fraction(3, 7), Fraction(4, 7))
        rows = [
            (Fraction(1, 2), Fraction(3, 4)),
            (Fraction(1, 3), Fraction(1, 2)),
        ]

        correct = evidence_probability(priors, rows)
        incorrect = independent_evidence_probability(priors, rows)

        assert correct == Fraction(2, 7)
        assert incorrect == Fraction(27, 98)
        assert correct - incorrect == Fraction(1, 98)

    def test_correct_denominator_is_the_joint_probability(self):
        example = get_worked_example('dependent-conditionally-independent-wide')
        space, a1, a2, b = example.build()
        p_b = probability(space, b)
        s = example.stated
        priors = (p_b, 1 - p_b)
        rows = [
            (s['p_a1_given_b'], s['p_a1_given_b_complement']),
            (s['p_a2_given_b'], s['p_a2_given_b_complement']),
        ]

        assert evidence_probability(priors, rows) == probability(space, a1 & a2)
        assert independent_evidence_probability(priors, rows) == probability(space, a1) * probability(space, a2)
