"""
Constants and choices for sequential app.
"""
from django.db import models


class SessionStatus(models.TextChoices):
    """Where a testing session stands."""
    RUNNING = 'running', 'Running'
    DECIDED_PRESENT = 'decided_present', 'Decided present'
    DECIDED_ABSENT = 'decided_absent', 'Decided absent'
    UNDECIDED_CAPPED = 'undecided_capped', 'Undecided (cap reached)'


class FixedTruth(models.TextChoices):
    """True disease status imposed on every simulated trial."""
    DISEASED = 'diseased', 'Diseased'
    HEALTHY = 'healthy', 'Healthy'


TERMINAL_STATUSES = (
    SessionStatus.DECIDED_PRESENT,
    SessionStatus.DECIDED_ABSENT,
    SessionStatus.UNDECIDED_CAPPED,
)

# Relative tolerance for a posterior to count as reaching a threshold.
THRESHOLD_REL_TOLERANCE = 1e-9
