"""
Per-trial random streams.

Trial i of a run seeded with s draws from ``SeedSequence([s, i])``, so a
trial's draws do not depend on how trials are split across processes.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TrialStreams:
    # True disease status
    truth: np.random.Generator
    # One uniform per test performed
    results: np.random.Generator


def make_trial_streams(seed: int, trial_index: int) -> TrialStreams:
    """
    Deterministically create the streams of one trial.

    Structure:
      trial
        ├── truth
        └── results
    """
    root = np.random.SeedSequence([seed, trial_index])
    ss_truth, ss_results = root.spawn(2)

    return TrialStreams(
        truth=np.random.default_rng(ss_truth),
        results=np.random.default_rng(ss_results),
    )
