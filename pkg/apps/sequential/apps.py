"""
Sequential app configuration.
"""
from django.apps import AppConfig


class SequentialConfig(AppConfig):
    """Sequential app configuration."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.sequential'
    verbose_name = 'Sequential Testing'
