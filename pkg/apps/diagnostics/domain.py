"""
Value objects for diagnostic testing.
"""
import math
from dataclasses import dataclass
from typing import Optional

from .validators import DiagnosticValidator


@dataclass(frozen=True)
class TestProfile:
    """Sensitivity P(T+|D) and specificity P(T-|D') of a test."""
    __test__ = False

    sensitivity: float
    specificity: float

    def __post_init__(self) -> None:
        DiagnosticValidator.validate_probability(self.sensitivity, 'sensitivity')
        DiagnosticValidator.validate_probability(self.specificity, 'specificity')
        object.__setattr__(self, 'sensitivity', float(self.sensitivity))
        object.__setattr__(self, 'specificity', float(self.specificity))

    @property
    def positive_row(self) -> tuple:
        """(P(T+|D), P(T+|D'))."""
        return (self.sensitivity, 1.0 - self.specificity)

    @property
    def negative_row(self) -> tuple:
        """(P(T-|D), P(T-|D'))."""
        return (1.0 - self.sensitivity, self.specificity)


@dataclass(frozen=True)
class DiseaseModel:
    """Prevalence P(D) of the disease in the tested population."""

    prevalence: float

    def __post_init__(self) -> None:
        DiagnosticValidator.validate_probability(self.prevalence, 'prevalence')
        object.__setattr__(self, 'prevalence', float(self.prevalence))

    @property
    def priors(self) -> tuple:
        return (self.prevalence, 1.0 - self.prevalence)


@dataclass(frozen=True)
class LikelihoodRatio:
    """Positive likelihood ratio Se / (1 - Sp), with its two special cases flagged."""

    value: float
    is_infinite: bool = False
    is_indeterminate: bool = False

    @property
    def is_informative(self) -> bool:
        """True when a positive result raises the odds of disease."""
        return not self.is_indeterminate and (self.is_infinite or self.value > 1.0)

    def __str__(self) -> str:
        if self.is_indeterminate:
            return 'indeterminate'
        if self.is_infinite:
            return 'inf'
        return repr(self.value)

    @classmethod
    def infinite(cls) -> 'LikelihoodRatio':
        return cls(value=math.inf, is_infinite=True)

    @classmethod
    def indeterminate(cls) -> 'LikelihoodRatio':
        return cls(value=math.nan, is_indeterminate=True)


@dataclass(frozen=True)
class DiagnosticReport:
    """Everything computed for one profile, prevalence and result sequence."""

    profile: TestProfile
    disease: DiseaseModel
    results: tuple
    posterior: float
    trace: tuple
    ppv: Optional[float]
    npv: Optional[float]
    likelihood_ratio: LikelihoodRatio
    threshold: Optional[float] = None
    tests_to_confidence: Optional[int] = None

    @property
    def results_text(self) -> str:
        return ''.join(str(result) for result in self.results)
