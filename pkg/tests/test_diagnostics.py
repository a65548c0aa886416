"""
Tests for diagnostic predictive values, repeated tests and the likelihood ratio.
"""
import math
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.bayes_core.domain import LikelihoodMatrix, PartitionModel
from apps.bayes_core.services import bayes_posterior, extended_bayes
from apps.diagnostics.constants import TestResult
from apps.diagnostics.domain import DiseaseModel, TestProfile
from apps.diagnostics.exceptions import (
    DivergenceError,
    InvalidProbabilityError,
    InvalidResultSequenceError,
    InvalidTestCountError,
    InvalidThresholdError,
    UndefinedPosteriorError,
)
from apps.diagnostics.services import (
    DiagnosticReportService,
    closed_form_tests_to_confidence,
    count_results,
    likelihood_ratio,
    npv,
    parse_results,
    posterior_after,
    posterior_trace,
    ppv,
    ppv_n_positives,
    results_from_counts,
    tests_to_confidence,
)

POS, NEG = TestResult.POSITIVE, TestResult.NEGATIVE


def _profile(se, sp=None):
    return TestProfile(sensitivity=se, specificity=se if sp is None else sp)


class TestDomain:
    """Tests for TestProfile and DiseaseModel validation."""

    def test_rows(self):
        profile = _profile(0.9, 0.8)
        assert profile.positive_row == pytest.approx((0.9, 0.2))
        assert profile.negative_row == pytest.approx((0.1, 0.8))

    @pytest.mark.parametrize('value', [-0.1, 1.5, float('nan'), 'high', True])
    def test_invalid_sensitivity(self, value):
        with pytest.raises(InvalidProbabilityError) as exc_info:
            TestProfile(sensitivity=value, specificity=0.9)
        assert exc_info.value.error_dict['sensitivity']

    def test_invalid_prevalence(self):
        with pytest.raises(InvalidProbabilityError):
            DiseaseModel(prevalence=2.0)

    def test_parse_results(self):
        assert parse_results('+ -,+') == (POS, NEG, POS)
        assert parse_results('') == ()

    def test_parse_results_rejects_symbols(self):
        with pytest.raises(InvalidResultSequenceError):
            parse_results('+x')

    def test_counts_round_trip(self):
        assert count_results(results_from_counts(3, 2)) == (3, 2)
        assert results_from_counts(2, 1) == (POS, POS, NEG)


class TestPredictiveValues:
    """Tests for ppv, npv and ppv_n_positives."""

    def test_ppv_single_positive(self, screening_profile, rare_disease):
        assert round(ppv(screening_profile, rare_disease), 3) == 0.019

    def test_ppv_high_prevalence_region(self, table_profile):
        assert round(ppv(table_profile, DiseaseModel(0.070)), 4) == 0.8817

    def test_ppv_certain_disease(self):
        assert ppv(_profile(0.7, 0.4), DiseaseModel(1.0)) == 1.0

    def test_ppv_undefined_without_positive_results(self):
        with pytest.raises(UndefinedPosteriorError) as exc_info:
            ppv(_profile(0.9, 1.0), DiseaseModel(0.0))
        assert exc_info.value.error_code == 'ERROR_UNDEFINED_POSTERIOR'

    def test_npv_without_disease(self):
        assert npv(_profile(0.9, 0.3), DiseaseModel(0.0)) == 1.0

    def test_npv_matches_bayes_posterior(self, screening_profile, rare_disease):
        model = PartitionModel(labels=('D', "D'"), priors=rare_disease.priors)
        expected = bayes_posterior(model, screening_profile.negative_row).mass("D'")
        assert npv(screening_profile, rare_disease) == pytest.approx(expected, abs=1e-12)

    def test_npv_perfect_sensitivity(self):
        assert npv(_profile(1.0, 0.8), DiseaseModel(0.4)) == 1.0

    def test_npv_undefined_without_negative_results(self):
        with pytest.raises(UndefinedPosteriorError):
            npv(_profile(1.0, 0.8), DiseaseModel(1.0))

    def test_three_positives(self, screening_profile, rare_disease):
        assert round(ppv_n_positives(screening_profile, rare_disease, 3), 3) == 0.873

    def test_two_positives_lowest_prevalence_region(self, table_profile):
        assert round(ppv_n_positives(table_profile, DiseaseModel(0.001), 2), 4) == 0.9075

    def test_one_positive_is_ppv(self, screening_profile, rare_disease):
        assert ppv_n_positives(screening_profile, rare_disease, 1) == ppv(screening_profile, rare_disease)

    @pytest.mark.parametrize('n', [0, -1, 2.0, True])
    def test_invalid_count(self, screening_profile, rare_disease, n):
        with pytest.raises(InvalidTestCountError):
            ppv_n_positives(screening_profile, rare_disease, n)

    def test_log_odds_fallback_when_both_terms_underflow(self):
        profile, disease, n = TestProfile(1.01e-4, 0.9999), DiseaseModel(0.001), 100
        se, fp, prior = Fraction(1.01e-4), Fraction(1.0 - 0.9999), Fraction(0.001)
        assert profile.sensitivity ** n == 0.0

        numerator = se ** n * prior
        expected = float(numerator / (numerator + fp ** n * (1 - prior)))
        assert ppv_n_positives(profile, disease, n) == pytest.approx(expected, rel=1e-10)


class TestPosteriorAfter:
    """Tests for posterior_after and posterior_trace."""

    def test_four_positives(self, screening_profile, rare_disease):
        assert round(posterior_after(screening_profile, rare_disease, [POS] * 4), 3) == 0.992

    def test_trace(self, screening_profile, rare_disease):
        trace = posterior_trace(screening_profile, rare_disease, [POS] * 4)
        assert [round(p, 3) for p in trace] == [0.019, 0.265, 0.873, 0.992]

    def test_no_results_keeps_prevalence(self, screening_profile, rare_disease):
        assert posterior_after(screening_profile, rare_disease, []) == 0.001

    def test_positive_and_negative_cancel(self, screening_profile, rare_disease):
        assert posterior_after(screening_profile, rare_disease, [POS, NEG]) == pytest.approx(0.001, abs=1e-15)

    def test_all_positive_matches_closed_form(self, table_profile):
        disease = DiseaseModel(0.012)
        for n in range(1, 8):
            assert posterior_after(table_profile, disease, [POS] * n) == pytest.approx(
                ppv_n_positives(table_profile, disease, n), abs=1e-12
            )

    def test_order_does_not_matter(self, screening_profile):
        disease = DiseaseModel(0.2)
        results = (POS, POS, NEG, POS, NEG)
        values = {posterior_after(screening_profile, disease, list(order)) for order in permutations(results)}
        assert len(values) == 1

    @pytest.mark.parametrize('prevalence, expected', [(0.0, 0.0), (1.0, 1.0)])
    def test_degenerate_prevalence_is_a_fixpoint(self, prevalence, expected):
        profile = _profile(0.9, 0.7)
        for results in ([POS], [NEG], [POS, NEG, NEG], [POS] * 5):
            assert posterior_after(profile, DiseaseModel(prevalence), results) == expected

    def test_impossible_sequence(self):
        with pytest.raises(UndefinedPosteriorError):
            posterior_after(_profile(1.0, 1.0), DiseaseModel(0.3), [POS, NEG])


class TestLikelihoodRatio:
    """Tests for likelihood_ratio."""

    @pytest.mark.parametrize('accuracy, expected', [(0.99, 99.0), (0.95, 19.0)])
    def test_symmetric_tests(self, accuracy, expected):
        ratio = likelihood_ratio(_profile(accuracy))
        assert ratio.value == pytest.approx(expected, rel=1e-12)
        assert ratio.is_informative

    def test_perfect_specificity_is_infinite(self):
        ratio = likelihood_ratio(_profile(0.9, 1.0))
        assert ratio.is_infinite and math.isinf(ratio.value)
        assert str(ratio) == 'inf'

    def test_indeterminate(self):
        ratio = likelihood_ratio(_profile(0.0, 1.0))
        assert ratio.is_indeterminate and not ratio.is_informative
        assert str(ratio) == 'indeterminate'

    def test_uninformative(self):
        assert not likelihood_ratio(_profile(0.5, 0.5)).is_informative


class TestTestsToConfidence:
    """Tests for tests_to_confidence and its closed-form cross-check."""

    @pytest.mark.parametrize('accuracy, threshold, expected', [(0.95, 0.99, 4), (0.99, 0.999, 4)])
    def test_rare_disease(self, rare_disease, accuracy, threshold, expected):
        profile = _profile(accuracy)
        assert tests_to_confidence(profile, rare_disease, threshold) == expected
        assert closed_form_tests_to_confidence(profile, rare_disease, threshold) == expected

    def test_three_positives_fall_just_short(self, table_profile, rare_disease):
        assert ppv_n_positives(table_profile, rare_disease, 3) < 0.999

    def test_already_confident(self, screening_profile):
        disease = DiseaseModel(0.3)
        threshold = ppv(screening_profile, disease) - 1e-6
        assert tests_to_confidence(screening_profile, disease, threshold) == 1

    def test_infinite_ratio_needs_one_test(self, rare_disease):
        profile = _profile(0.5, 1.0)
        assert tests_to_confidence(profile, rare_disease, 0.999) == 1
        assert closed_form_tests_to_confidence(profile, rare_disease, 0.999) == 1

    @pytest.mark.parametrize('profile, prevalence', [
        (TestProfile(0.5, 0.5), 0.1),
        (TestProfile(0.3, 0.6), 0.1),
        (TestProfile(0.9, 0.9), 0.0),
        (TestProfile(0.9, 0.9), 1.0),
    ])
    def test_divergence(self, profile, prevalence):
        with pytest.raises(DivergenceError):
            tests_to_confidence(profile, DiseaseModel(prevalence), 0.9)

    @pytest.mark.parametrize('threshold', [0.0, 1.0, 1.2])
    def test_invalid_threshold(self, screening_profile, rare_disease, threshold):
        with pytest.raises(InvalidThresholdError):
            tests_to_confidence(screening_profile, rare_disease, threshold)

    def test_monotone_convergence(self, screening_profile, rare_disease):
        values = [ppv_n_positives(screening_profile, rare_disease, n) for n in range(1, 11)]
        assert all(a < b for a, b in zip(values, values[1:]))

        first = next(n for n, value in enumerate(values, start=1) if value > 1 - 1e-9)
        prior_odds = (1 - 0.001) / 0.001
        closed_form = math.ceil(math.log(prior_odds * (1 - 1e-9) / 1e-9) / math.log(19))
        assert first == closed_form == 10


class TestDiagnosticReportService:
    """Tests for DiagnosticReportService."""

    def test_result_sequence(self, screening_profile, rare_disease):
        report = DiagnosticReportService(screening_profile, rare_disease, results='++', threshold=0.99).execute()
        assert report.results_text == '++'
        assert round(report.posterior, 3) == 0.265
        assert len(report.trace) == 2
        assert report.tests_to_confidence == 4
        assert report.ppv == ppv(screening_profile, rare_disease)

    def test_n_positives(self, screening_profile, rare_disease):
        report = DiagnosticReportService(screening_profile, rare_disease, n_positives=3).execute()
        assert report.results_text == '+++'
        assert [round(p, 3) for p in report.trace] == [0.019, 0.265, 0.873]
        assert report.tests_to_confidence is None

    def test_no_results(self, screening_profile, rare_disease):
        report = DiagnosticReportService(screening_profile, rare_disease).execute()
        assert report.posterior == 0.001
        assert report.trace == ()

    def test_undefined_predictive_value_is_none(self):
        report = DiagnosticReportService(_profile(1.0, 0.9), DiseaseModel(1.0), results='+').execute()
        assert report.posterior == 1.0
        assert report.npv is None


probabilities = st.floats(min_value=0.01, max_value=0.99)


class TestSpecializationProperties:
    """Diagnostics agree with the general two-cell Bayes computation."""

    @settings(max_examples=200, deadline=None)
    @given(
        se=probabilities,
        sp=probabilities,
        prevalence=probabilities,
        results=st.lists(st.sampled_from([POS, NEG]), min_size=1, max_size=12),
    )
    def test_posterior_matches_extended_bayes(self, se, sp, prevalence, results):
        profile, disease = _profile(se, sp), DiseaseModel(prevalence)
        model = PartitionModel(labels=('D', "D'"), priors=disease.priors)
        rows = [profile.positive_row if r == POS else profile.negative_row for r in results]

        expected = extended_bayes(model, LikelihoodMatrix.from_rows(rows)).mass('D')
        assert posterior_after(profile, disease, results) == pytest.approx(expected, abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(se=probabilities, sp=probabilities, prevalence=probabilities)
    def test_ppv_complements_posterior_of_no_disease(self, se, sp, prevalence):
        profile, disease = _profile(se, sp), DiseaseModel(prevalence)
        model = PartitionModel(labels=('D', "D'"), priors=disease.priors)
        healthy = bayes_posterior(model, profile.positive_row).mass("D'")
        assert ppv(profile, disease) == pytest.approx(1.0 - healthy, abs=1e-12)
