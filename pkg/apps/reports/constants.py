"""
Constants and choices for reports app.
"""
from django.db import models


class ReportFormat(models.TextChoices):
    """Output formats of render_report."""
    TEXT = 'text', 'Text table'
    CSV = 'csv', 'CSV'
    STRUCTURED = 'structured', 'Structured (JSON)'


class ScenarioKind(models.TextChoices):
    """Kinds of scenario file."""
    FINITE_SPACE = 'finite_space', 'Finite space checks'
    DIAGNOSTIC = 'diagnostic', 'Diagnostic computation'
    SIMULATION = 'simulation', 'Stopping rule simulation'


class CheckName(models.TextChoices):
    """Checks a finite-space scenario may request."""
    PROBABILITY = 'probability', 'P(A)'
    CONDITIONAL_PROBABILITY = 'conditional_probability', 'P(A | B)'
    INDEPENDENT = 'independent', 'Independence'
    CONDITIONALLY_INDEPENDENT = 'conditionally_independent', 'Conditional independence'
    CONDITIONALLY_INDEPENDENT_MANY = 'conditionally_independent_many', 'Conditional independence of a family'
    CLASSIFY_PAIR = 'classify_pair', 'Pair classification'
    THEOREM1_PREMISES = 'theorem1_premises', 'Sufficient premises for conditional independence'


REGION_COLUMN = 'region'
PREVALENCE_COLUMN = 'prevalence'
