"""
The threshold stopping rule

    N = inf{n >= 1 : p_n <= α_n or p_n >= β_n}

where p_n is the posterior of disease after n results. The prior p_0 is
never compared with the thresholds and a session that reaches max_tests
without a decision stops as undecided.
"""
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from apps.diagnostics.constants import TestResult
from apps.diagnostics.domain import DiseaseModel, TestProfile
from apps.diagnostics.services import posterior_after, results_from_counts

from .constants import TERMINAL_STATUSES, THRESHOLD_REL_TOLERANCE, FixedTruth, SessionStatus
from .domain import (
    OperatingCharacteristics,
    SequenceRun,
    SessionState,
    SimulationReport,
    StoppingRuleConfig,
    ThresholdSchedule,
    TrialRecord,
)
from .exceptions import InvalidSimulationError, SessionStoppedError
from .rng import make_trial_streams
from .validators import ScheduleValidator, SimulationValidator

logger = logging.getLogger(__name__)


def validate_schedule(schedule: ThresholdSchedule) -> ThresholdSchedule:
    """Return the schedule unchanged if its threshold chain holds."""
    ScheduleValidator.validate_chain(schedule)
    return schedule


def _reaches(posterior: float, threshold: float) -> bool:
    return math.isclose(posterior, threshold, rel_tol=THRESHOLD_REL_TOLERANCE, abs_tol=0.0)


def decide(config: StoppingRuleConfig, n: int, posterior: float) -> str:
    """
    Status after the n-th result; an upper-bound hit wins a tie.

    A posterior within THRESHOLD_REL_TOLERANCE of a threshold counts as
    reaching it, so 1/20 computed as 0.050000000000000044 stops at 0.05.
    """
    alpha, beta = config.schedule.alpha(n), config.schedule.beta(n)
    if posterior >= beta or _reaches(posterior, beta):
        return SessionStatus.DECIDED_PRESENT
    if posterior <= alpha or _reaches(posterior, alpha):
        return SessionStatus.DECIDED_ABSENT
    if n >= config.max_tests:
        return SessionStatus.UNDECIDED_CAPPED
    return SessionStatus.RUNNING


def step(state: SessionState, config: StoppingRuleConfig, profile: TestProfile, result: str) -> SessionState:
    """Apply one more test result to a running session."""
    if not state.is_running:
        raise SessionStoppedError(state.status)

    history = state.history + (TestResult(result),)
    n = len(history)
    posterior = posterior_after(profile, DiseaseModel(state.prevalence), history)

    return SessionState(
        prevalence=state.prevalence,
        tests_done=n,
        posterior=posterior,
        history=history,
        status=decide(config, n, posterior),
    )


def run_sequence(
    config: StoppingRuleConfig,
    profile: TestProfile,
    disease: DiseaseModel,
    results: Sequence[str],
) -> SequenceRun:
    """Feed results in order until the session stops."""
    state = SessionState.start(disease.prevalence)
    trace: List[float] = []

    for position, result in enumerate(results):
        if not state.is_running:
            return SequenceRun(state=state, trace=tuple(trace), unconsumed=tuple(map(TestResult, results[position:])))
        state = step(state, config, profile, result)
        trace.append(state.posterior)

    return SequenceRun(state=state, trace=tuple(trace), unconsumed=())


def simulate_trial(
    config: StoppingRuleConfig,
    profile: TestProfile,
    disease: DiseaseModel,
    seed: int,
    index: int,
    fix_truth: Optional[str] = None,
) -> TrialRecord:
    """Trial ``index`` of the run seeded with ``seed``."""
    streams = make_trial_streams(seed, index)

    if fix_truth is None:
        diseased = bool(streams.truth.random() < disease.prevalence)
    else:
        diseased = FixedTruth(fix_truth) == FixedTruth.DISEASED

    positive_rate = profile.sensitivity if diseased else 1.0 - profile.specificity
    state = SessionState.start(disease.prevalence)
    while state.is_running:
        result = TestResult.POSITIVE if streams.results.random() < positive_rate else TestResult.NEGATIVE
        state = step(state, config, profile, result)

    return TrialRecord(index=index, diseased=diseased, state=state)


def _configure_worker(settings_module: Optional[str]) -> None:
    if settings_module:
        os.environ.setdefault('DJANGO_SETTINGS_MODULE', settings_module)
    import django

    django.setup()


def _run_block(
    config: StoppingRuleConfig,
    profile: TestProfile,
    disease: DiseaseModel,
    seed: int,
    indices: range,
    fix_truth: Optional[str],
) -> List[Tuple[bool, int, str]]:
    outcomes = []
    for index in indices:
        record = simulate_trial(config, profile, disease, seed, index, fix_truth)
        outcomes.append((record.diseased, record.stopping_time, str(record.state.status)))
    return outcomes


def _blocks(trials: int, workers: int) -> List[range]:
    size, extra = divmod(trials, workers)
    blocks, start = [], 0
    for worker in range(workers):
        stop = start + size + (1 if worker < extra else 0)
        if stop > start:
            blocks.append(range(start, stop))
        start = stop
    return blocks


def _rate(hits: int, total: int) -> Tuple[Optional[float], Optional[float]]:
    if total == 0:
        return None, None
    rate = hits / total
    return rate, math.sqrt(rate * (1.0 - rate) / total)


class SimulationService:
    """Service for Monte Carlo evaluation of the stopping rule."""

    @staticmethod
    def execute(
        config: StoppingRuleConfig,
        profile: TestProfile,
        disease: DiseaseModel,
        trials: int,
        seed: int,
        fix_truth: Optional[str] = None,
        workers: Optional[int] = None,
    ) -> SimulationReport:
        """
        Run ``trials`` independent sessions.

        Trials are split into contiguous blocks, one per worker process, and
        aggregated in trial order, so the report does not depend on
        ``workers``.
        """
        SimulationValidator.validate_trials(trials)
        SimulationValidator.validate_seed(seed)
        workers = settings.DXBAYES['SIMULATION_WORKERS'] if workers is None else workers
        SimulationValidator.validate_workers(workers)
        if fix_truth is not None:
            fix_truth = FixedTruth(fix_truth)

        blocks = _blocks(trials, min(workers, trials))
        if len(blocks) == 1:
            outcomes = _run_block(config, profile, disease, seed, blocks[0], fix_truth)
        else:
            with ProcessPoolExecutor(
                max_workers=len(blocks),
                initializer=_configure_worker,
                initargs=(os.environ.get('DJANGO_SETTINGS_MODULE'),),
            ) as executor:
                futures = [
                    executor.submit(_run_block, config, profile, disease, seed, block, fix_truth)
                    for block in blocks
                ]
                outcomes = [outcome for future in futures for outcome in future.result()]

        report = SimulationService._aggregate(config, seed, outcomes, fix_truth)
        logger.info(
            f"Simulated {trials} trials (seed={seed}, workers={len(blocks)}): "
            f"E[N]={report.mean_stopping_time:.4f}"
        )
        return report

    @staticmethod
    def _aggregate(
        config: StoppingRuleConfig,
        seed: int,
        outcomes: List[Tuple[bool, int, str]],
        fix_truth: Optional[str],
    ) -> SimulationReport:
        trials = len(outcomes)
        stopping_times = [n for _, n, _ in outcomes]
        mean = math.fsum(stopping_times) / trials
        if trials > 1:
            variance = math.fsum((n - mean) ** 2 for n in stopping_times) / (trials - 1)
            standard_error = math.sqrt(variance / trials)
        else:
            standard_error = 0.0

        counts: Dict[str, int] = dict.fromkeys(TERMINAL_STATUSES, 0)
        diseased = healthy = missed = false_alarms = 0
        for is_diseased, _, status in outcomes:
            counts[status] += 1
            if is_diseased:
                diseased += 1
                missed += status == SessionStatus.DECIDED_ABSENT
            else:
                healthy += 1
                false_alarms += status == SessionStatus.DECIDED_PRESENT

        false_negative_rate, false_negative_se = _rate(missed, diseased)
        false_positive_rate, false_positive_se = _rate(false_alarms, healthy)

        return SimulationReport(
            trials=trials,
            seed=seed,
            max_tests=config.max_tests,
            mean_stopping_time=mean,
            stopping_time_standard_error=standard_error,
            decision_rates={str(status): count / trials for status, count in counts.items()},
            diseased_trials=diseased,
            healthy_trials=healthy,
            false_negative_rate=false_negative_rate,
            false_positive_rate=false_positive_rate,
            false_negative_standard_error=false_negative_se,
            false_positive_standard_error=false_positive_se,
            fix_truth=str(fix_truth) if fix_truth is not None else None,
        )


def simulate(
    config: StoppingRuleConfig,
    profile: TestProfile,
    disease: DiseaseModel,
    trials: int,
    seed: int,
    fix_truth: Optional[str] = None,
    workers: Optional[int] = None,
) -> SimulationReport:
    return SimulationService.execute(config, profile, disease, trials, seed, fix_truth, workers)


def _absorption(
    config: StoppingRuleConfig,
    profile: TestProfile,
    disease: DiseaseModel,
    diseased: bool,
) -> Tuple[float, Dict[str, float]]:
    """E[N] and decision probabilities for one true status."""
    positive_rate = profile.sensitivity if diseased else 1.0 - profile.specificity
    statuses: Dict[Tuple[int, int], str] = {}
    decisions = dict.fromkeys(TERMINAL_STATUSES, 0.0)
    expected = 0.0
    # Mass of running sessions by (positives, negatives).
    frontier: Dict[Tuple[int, int], float] = {(0, 0): 1.0}

    for n in range(1, config.max_tests + 1):
        reached: Dict[Tuple[int, int], float] = {}
        for (positives, negatives), mass in sorted(frontier.items()):
            for key, weight in (((positives + 1, negatives), positive_rate), ((positives, negatives + 1), 1.0 - positive_rate)):
                if weight > 0.0:
                    reached[key] = reached.get(key, 0.0) + mass * weight

        frontier = {}
        for key, mass in sorted(reached.items()):
            if key not in statuses:
                posterior = posterior_after(profile, disease, results_from_counts(*key))
                statuses[key] = decide(config, n, posterior)
            status = statuses[key]
            if status == SessionStatus.RUNNING:
                frontier[key] = mass
            else:
                decisions[status] += mass
                expected += n * mass
        if not frontier:
            break

    return expected, decisions


def exact_operating_characteristics(
    config: StoppingRuleConfig,
    profile: TestProfile,
    disease: DiseaseModel,
    fix_truth: Optional[str] = None,
) -> OperatingCharacteristics:
    """
    Exact E[N] and decision probabilities by a forward recursion over
    (positives, negatives) counts.

    The posterior depends only on the counts, so every path reaching a count
    pair shares one decision.
    """
    if fix_truth is None:
        weights = {True: disease.prevalence, False: 1.0 - disease.prevalence}
    else:
        fix_truth = FixedTruth(fix_truth)
        weights = {True: 1.0, False: 0.0} if fix_truth == FixedTruth.DISEASED else {True: 0.0, False: 1.0}

    expected = 0.0
    decisions = dict.fromkeys(TERMINAL_STATUSES, 0.0)
    error_rates: Dict[bool, Optional[float]] = {True: None, False: None}

    for diseased, weight in weights.items():
        if weight == 0.0:
            continue
        branch_expected, branch_decisions = _absorption(config, profile, disease, diseased)
        expected += weight * branch_expected
        for status, probability in branch_decisions.items():
            decisions[status] += weight * probability
        wrong = SessionStatus.DECIDED_ABSENT if diseased else SessionStatus.DECIDED_PRESENT
        error_rates[diseased] = branch_decisions[wrong]

    if not any(weights.values()):
        raise InvalidSimulationError('no true status has positive probability', field='fix_truth')

    return OperatingCharacteristics(
        max_tests=config.max_tests,
        expected_stopping_time=expected,
        decision_probabilities={str(status): value for status, value in decisions.items()},
        false_negative_rate=error_rates[True],
        false_positive_rate=error_rates[False],
        fix_truth=str(fix_truth) if fix_truth is not None else None,
    )
