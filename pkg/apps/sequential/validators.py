"""
Validators for threshold schedules and simulation requests.
"""
import math
from typing import TYPE_CHECKING, Any, Optional

from .exceptions import ChainViolationError, InvalidScheduleError, InvalidSimulationError

if TYPE_CHECKING:
    from .domain import ThresholdSchedule


def _is_open_probability(value: Any) -> bool:
    return isinstance(value, float) and math.isfinite(value) and 0.0 < value < 1.0


class ScheduleValidator:
    """Validator for the α/β threshold chain."""

    @staticmethod
    def validate_prefix(alphas: tuple, betas: tuple) -> None:
        """Validate that both explicit prefixes are non-empty lists of numbers."""
        if not alphas or not betas:
            raise InvalidScheduleError('alphas and betas each need at least one value')

        for value in alphas + betas:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidScheduleError(f'threshold {value!r} is not a number')

    @staticmethod
    def validate_chain(schedule: 'ThresholdSchedule') -> None:
        """
        Validate the chain index by index over the explicit prefix.

        Constant extension repeats the last values, so the prefix decides
        every inequality.
        """
        beta_1 = schedule.beta(1)
        for n in range(1, schedule.horizon + 1):
            alpha, beta = schedule.alpha(n), schedule.beta(n)

            if not _is_open_probability(alpha):
                raise ChainViolationError(n, f'α_{n}={alpha} is not in (0, 1)')
            if n > 1 and alpha < schedule.alpha(n - 1):
                raise ChainViolationError(n, f'α_{n}={alpha} < α_{n - 1}={schedule.alpha(n - 1)}')
            if alpha > beta_1:
                raise ChainViolationError(n, f'α_{n}={alpha} > β_1={beta_1}')

            if not _is_open_probability(beta):
                raise ChainViolationError(n, f'β_{n}={beta} is not in (0, 1)')
            if n > 1 and beta < schedule.beta(n - 1):
                raise ChainViolationError(n, f'β_{n}={beta} < β_{n - 1}={schedule.beta(n - 1)}')

    @staticmethod
    def validate_max_tests(max_tests: Any) -> None:
        """Validate that the cap is a positive integer."""
        if isinstance(max_tests, bool) or not isinstance(max_tests, int) or max_tests < 1:
            raise InvalidScheduleError(f'max_tests must be a positive integer, got {max_tests!r}', field='max_tests')


class SimulationValidator:
    """Validator for Monte Carlo parameters."""

    @staticmethod
    def validate_trials(trials: Any, maximum: Optional[int] = None) -> None:
        if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
            raise InvalidSimulationError(f'trials must be a positive integer, got {trials!r}')

        if maximum is not None and trials > maximum:
            raise InvalidSimulationError(f'at most {maximum} trials are allowed, got {trials}')

    @staticmethod
    def validate_seed(seed: Any) -> None:
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise InvalidSimulationError(f'seed must be a non-negative integer, got {seed!r}', field='seed')

    @staticmethod
    def validate_workers(workers: Any) -> None:
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise InvalidSimulationError(f'workers must be a positive integer, got {workers!r}', field='workers')
