"""
Constants and choices for finite-prob app.
"""
from django.db import models


class IndependenceMode(models.TextChoices):
    """How a family of events is checked for conditional independence."""
    PAIRWISE = 'pairwise', 'Pairwise'
    MUTUAL = 'mutual', 'Mutual'
