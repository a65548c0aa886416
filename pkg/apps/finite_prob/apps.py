"""
Finite-prob app configuration.
"""
from django.apps import AppConfig


class FiniteProbConfig(AppConfig):
    """Finite-prob app configuration."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.finite_prob'
    verbose_name = 'Finite Probability'
