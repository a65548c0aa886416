"""
Bayes-core app configuration.
"""
from django.apps import AppConfig


class BayesCoreConfig(AppConfig):
    """Bayes-core app configuration."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.bayes_core'
    verbose_name = 'Bayes Core'
