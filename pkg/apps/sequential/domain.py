"""
Value objects for the sequential stopping rule.
"""
from dataclasses import dataclass, field
from itertools import islice
from typing import Dict, Iterable, Optional, Tuple

from apps.bayes_core.validators import is_probability
from apps.diagnostics.constants import TestResult

from .constants import SessionStatus
from .exceptions import InvalidScheduleError
from .validators import ScheduleValidator


@dataclass(frozen=True)
class ThresholdSchedule:
    """
    Lower thresholds α_n and upper thresholds β_n.

    Past the explicit prefix each sequence repeats its last value.
    """

    alphas: Tuple[float, ...]
    betas: Tuple[float, ...]

    def __post_init__(self) -> None:
        alphas, betas = tuple(self.alphas), tuple(self.betas)
        ScheduleValidator.validate_prefix(alphas, betas)
        object.__setattr__(self, 'alphas', tuple(float(a) for a in alphas))
        object.__setattr__(self, 'betas', tuple(float(b) for b in betas))

    @classmethod
    def constant(cls, alpha: float, beta: float) -> 'ThresholdSchedule':
        return cls(alphas=(alpha,), betas=(beta,))

    @classmethod
    def from_iterables(cls, alphas: Iterable[float], betas: Iterable[float], horizon: int) -> 'ThresholdSchedule':
        """Take the first ``horizon`` values of two (possibly infinite) sequences."""
        if horizon < 1:
            raise InvalidScheduleError(f'horizon must be positive, got {horizon}')
        return cls(alphas=tuple(islice(alphas, horizon)), betas=tuple(islice(betas, horizon)))

    @property
    def horizon(self) -> int:
        """Length of the explicit prefix."""
        return max(len(self.alphas), len(self.betas))

    def alpha(self, n: int) -> float:
        return self.alphas[min(n, len(self.alphas)) - 1]

    def beta(self, n: int) -> float:
        return self.betas[min(n, len(self.betas)) - 1]


@dataclass(frozen=True)
class StoppingRuleConfig:
    """A validated schedule plus the cap on the number of tests."""

    schedule: ThresholdSchedule
    max_tests: int

    def __post_init__(self) -> None:
        ScheduleValidator.validate_chain(self.schedule)
        ScheduleValidator.validate_max_tests(self.max_tests)


@dataclass(frozen=True)
class SessionState:
    """One patient's testing session after ``tests_done`` results."""

    prevalence: float
    tests_done: int = 0
    posterior: Optional[float] = None
    history: Tuple[TestResult, ...] = ()
    status: str = SessionStatus.RUNNING

    def __post_init__(self) -> None:
        history = tuple(TestResult(result) for result in self.history)
        posterior = self.prevalence if self.posterior is None else self.posterior
        if len(history) != self.tests_done:
            raise InvalidScheduleError(
                f'history holds {len(history)} results but tests_done is {self.tests_done}', field='history',
            )
        if not is_probability(posterior):
            raise InvalidScheduleError(f'posterior {posterior!r} is not a probability', field='posterior')
        object.__setattr__(self, 'history', history)
        object.__setattr__(self, 'posterior', float(posterior))
        object.__setattr__(self, 'status', SessionStatus(self.status))

    @classmethod
    def start(cls, prevalence: float) -> 'SessionState':
        return cls(prevalence=prevalence)

    @property
    def is_running(self) -> bool:
        return self.status == SessionStatus.RUNNING


@dataclass(frozen=True)
class SequenceRun:
    """Result of feeding a list of results through the stopping rule."""

    state: SessionState
    trace: Tuple[float, ...]
    unconsumed: Tuple[TestResult, ...]


@dataclass(frozen=True)
class TrialRecord:
    """One simulated patient: true status, results drawn and final state."""

    index: int
    diseased: bool
    state: SessionState

    @property
    def stopping_time(self) -> int:
        return self.state.tests_done

    @property
    def results(self) -> Tuple[TestResult, ...]:
        return self.state.history


@dataclass(frozen=True)
class SimulationReport:
    """Monte Carlo estimate of the stopping rule's operating characteristics."""

    trials: int
    seed: int
    max_tests: int
    mean_stopping_time: float
    stopping_time_standard_error: float
    decision_rates: Dict[str, float]
    diseased_trials: int
    healthy_trials: int
    # P(decide absent | diseased) and P(decide present | healthy); None without such trials.
    false_negative_rate: Optional[float]
    false_positive_rate: Optional[float]
    false_negative_standard_error: Optional[float]
    false_positive_standard_error: Optional[float]
    fix_truth: Optional[str] = None

    @property
    def conditional_error_rates(self) -> Dict[str, Optional[float]]:
        return {
            'absent_given_diseased': self.false_negative_rate,
            'present_given_healthy': self.false_positive_rate,
        }


@dataclass(frozen=True)
class OperatingCharacteristics:
    """Exact operating characteristics from the forward recursion."""

    max_tests: int
    expected_stopping_time: float
    decision_probabilities: Dict[str, float] = field(default_factory=dict)
    false_negative_rate: Optional[float] = None
    false_positive_rate: Optional[float] = None
    fix_truth: Optional[str] = None
