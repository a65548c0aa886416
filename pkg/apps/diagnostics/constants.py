"""
Constants and choices for diagnostics app.
"""
from django.db import models


class TestResult(models.TextChoices):
    """Outcome of a single diagnostic test."""
    __test__ = False

    POSITIVE = '+', 'Positive'
    NEGATIVE = '-', 'Negative'

