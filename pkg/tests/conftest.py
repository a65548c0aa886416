"""
Pytest configuration and fixtures.
"""
import os
from pathlib import Path

import django
import pytest

# Configure Django settings
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings.test')
django.setup()

TESTS_DIR = Path(__file__).resolve().parent


@pytest.fixture
def api_client():
    """Return DRF API client."""
    from rest_framework.test import APIClient
    return APIClient()


@pytest.fixture
def golden_dir():
    return TESTS_DIR / 'golden'


@pytest.fixture
def scenario_dir():
    return TESTS_DIR / 'scenarios'


@pytest.fixture
def regions():
    """The bundled eight-region prevalence data."""
    from django.conf import settings

    from apps.reports.loaders import load_regions
    return load_regions(settings.DXBAYES['REGIONS_FIXTURE'])


@pytest.fixture
def table_profile():
    """Sensitivity and specificity 0.99."""
    from apps.diagnostics.domain import TestProfile
    return TestProfile(sensitivity=0.99, specificity=0.99)


@pytest.fixture
def screening_profile():
    """Sensitivity and specificity 0.95."""
    from apps.diagnostics.domain import TestProfile
    return TestProfile(sensitivity=0.95, specificity=0.95)


@pytest.fixture
def rare_disease():
    """Prevalence 0.001."""
    from apps.diagnostics.domain import DiseaseModel
    return DiseaseModel(prevalence=0.001)


@pytest.fixture
def write_csv(tmp_path):
    """Write a region CSV and return its path."""
    def _write(text: str, name: str = 'regions.csv') -> Path:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return path
    return _write
