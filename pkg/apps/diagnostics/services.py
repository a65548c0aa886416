"""
Diagnostic testing as a two-cell Bayes problem over (D, D').

Repeated results are assumed conditionally independent under D and under D',
and every repeat uses the same test profile.
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple

from django.conf import settings
from scipy.special import expit

from apps.bayes_core.exceptions import ZeroEvidenceError
from apps.bayes_core.services import posterior_masses

from .constants import TestResult
from .domain import DiagnosticReport, DiseaseModel, LikelihoodRatio, TestProfile
from .exceptions import DivergenceError, InvalidResultSequenceError, UndefinedPosteriorError
from .validators import DiagnosticValidator

logger = logging.getLogger(__name__)


def parse_results(text: str) -> Tuple[TestResult, ...]:
    """Parse a sequence such as ``"++-"``; spaces and commas are ignored."""
    results = []
    for symbol in text:
        if symbol in ' ,':
            continue
        if symbol not in TestResult.values:
            raise InvalidResultSequenceError(symbol)
        results.append(TestResult(symbol))
    return tuple(results)


def _row(profile: TestProfile, result: str) -> tuple:
    if TestResult(result) == TestResult.POSITIVE:
        return profile.positive_row
    return profile.negative_row


def _masses(profile: TestProfile, disease: DiseaseModel, results: Sequence[str]):
    rows = [_row(profile, result) for result in results]
    try:
        return posterior_masses(disease.priors, rows)
    except ZeroEvidenceError:
        raise UndefinedPosteriorError(f"the result sequence {''.join(results) or '(empty)'}")


def posterior_after(profile: TestProfile, disease: DiseaseModel, results: Sequence[str]) -> float:
    """P(D | results) for any mix of positive and negative results."""
    if not results:
        return disease.prevalence
    return float(_masses(profile, disease, results)[0])


def posterior_trace(profile: TestProfile, disease: DiseaseModel, results: Sequence[str]) -> List[float]:
    """p_1..p_n, the posterior after each prefix of the results."""
    return [posterior_after(profile, disease, results[:n]) for n in range(1, len(results) + 1)]


def ppv_n_positives(profile: TestProfile, disease: DiseaseModel, n: int) -> float:
    """
    P(D | n positives) = Se^n π / (Se^n π + (1 - Sp)^n (1 - π)).

    Falls back to log-odds when both terms underflow.
    """
    DiagnosticValidator.validate_test_count(n)
    se, sp, prevalence = profile.sensitivity, profile.specificity, disease.prevalence

    true_positive = se ** n * prevalence
    false_positive = (1.0 - sp) ** n * (1.0 - prevalence)
    evidence = true_positive + false_positive

    if evidence > 0.0:
        return true_positive / evidence

    if se > 0.0 and sp < 1.0 and 0.0 < prevalence < 1.0:
        log_odds = (
            n * (math.log(se) - math.log1p(-sp))
            + math.log(prevalence) - math.log1p(-prevalence)
        )
        return float(expit(log_odds))

    raise UndefinedPosteriorError(f'{n} positive result(s)')


def ppv(profile: TestProfile, disease: DiseaseModel) -> float:
    """Positive predictive value P(D | T+)."""
    return ppv_n_positives(profile, disease, 1)


def npv(profile: TestProfile, disease: DiseaseModel) -> float:
    """Negative predictive value P(D' | T-)."""
    return float(_masses(profile, disease, [TestResult.NEGATIVE])[1])


def likelihood_ratio(profile: TestProfile) -> LikelihoodRatio:
    """Se / (1 - Sp); infinite when Sp = 1 and Se > 0, indeterminate when both are degenerate."""
    if profile.specificity == 1.0:
        if profile.sensitivity > 0.0:
            return LikelihoodRatio.infinite()
        return LikelihoodRatio.indeterminate()
    return LikelihoodRatio(value=profile.sensitivity / (1.0 - profile.specificity))


def _check_convergent(profile: TestProfile, disease: DiseaseModel, threshold: float) -> LikelihoodRatio:
    DiagnosticValidator.validate_threshold(threshold)

    ratio = likelihood_ratio(profile)
    if not ratio.is_informative:
        raise DivergenceError(f'likelihood ratio {ratio} is not above 1')

    if disease.prevalence in (0.0, 1.0):
        raise DivergenceError(f'prevalence {disease.prevalence} is degenerate')
    return ratio


def tests_to_confidence(profile: TestProfile, disease: DiseaseModel, threshold: float) -> int:
    """Smallest n whose n-positive PPV reaches the threshold."""
    _check_convergent(profile, disease, threshold)

    limit = settings.DXBAYES['MAX_CONFIDENCE_TESTS']
    for n in range(1, limit + 1):
        if ppv_n_positives(profile, disease, n) >= threshold:
            logger.debug(f"Threshold {threshold} reached after {n} positive tests")
            return n

    raise DivergenceError(f'not reached within {limit} tests')


def closed_form_tests_to_confidence(profile: TestProfile, disease: DiseaseModel, threshold: float) -> int:
    """⌈log(target odds / prior odds) / log LR⌉, at least 1."""
    ratio = _check_convergent(profile, disease, threshold)
    if ratio.is_infinite:
        return 1

    prevalence = disease.prevalence
    target_log_odds = math.log(threshold) - math.log1p(-threshold)
    prior_log_odds = math.log(prevalence) - math.log1p(-prevalence)
    return max(1, math.ceil((target_log_odds - prior_log_odds) / math.log(ratio.value)))


def results_from_counts(positives: int, negatives: int) -> Tuple[TestResult, ...]:
    """Canonical sequence with all positives first."""
    return (TestResult.POSITIVE,) * positives + (TestResult.NEGATIVE,) * negatives


def count_results(results: Sequence[str]) -> Tuple[int, int]:
    """(positives, negatives) in a result sequence."""
    positives = sum(1 for result in results if TestResult(result) == TestResult.POSITIVE)
    return positives, len(results) - positives


class DiagnosticReportService:
    """Service for computing a full diagnostic report."""

    def __init__(
        self,
        profile: TestProfile,
        disease: DiseaseModel,
        results: Sequence[str] = (),
        n_positives: Optional[int] = None,
        threshold: Optional[float] = None,
    ) -> None:
        self.profile = profile
        self.disease = disease
        self.results = tuple(TestResult(result) for result in results)
        self.n_positives = n_positives
        self.threshold = threshold

    def execute(self) -> DiagnosticReport:
        """Compute the report; undefined predictive values are left as None."""
        if self.n_positives is not None:
            DiagnosticValidator.validate_test_count(self.n_positives)
            results = results_from_counts(self.n_positives, 0)
            trace = tuple(ppv_n_positives(self.profile, self.disease, n) for n in range(1, self.n_positives + 1))
        else:
            results = self.results
            trace = tuple(posterior_trace(self.profile, self.disease, results))

        report = DiagnosticReport(
            profile=self.profile,
            disease=self.disease,
            results=results,
            posterior=trace[-1] if trace else self.disease.prevalence,
            trace=trace,
            ppv=self._defined(ppv),
            npv=self._defined(npv),
            likelihood_ratio=likelihood_ratio(self.profile),
            threshold=self.threshold,
            tests_to_confidence=(
                tests_to_confidence(self.profile, self.disease, self.threshold)
                if self.threshold is not None else None
            ),
        )
        logger.debug(f"Diagnostic report for {len(results)} result(s): posterior={report.posterior!r}")
        return report

    def _defined(self, measure) -> Optional[float]:
        try:
            return measure(self.profile, self.disease)
        except UndefinedPosteriorError:
            return None
