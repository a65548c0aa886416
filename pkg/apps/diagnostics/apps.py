"""
Diagnostics app configuration.
"""
from django.apps import AppConfig


class DiagnosticsConfig(AppConfig):
    """Diagnostics app configuration."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.diagnostics'
    verbose_name = 'Diagnostics'
