"""
Production settings for the dxbayes project.
"""
from .base import *

DEBUG = False

# Security settings for production
SECURE_SSL_REDIRECT = env.bool('SECURE_SSL_REDIRECT', default=True)
SECURE_HSTS_SECONDS = 31536000
SECURE_HSTS_INCLUDE_SUBDOMAINS = True
SECURE_HSTS_PRELOAD = True

# Simulations are the only expensive request; keep them bounded
DXBAYES['MAX_API_TRIALS'] = env.int('DXBAYES_MAX_API_TRIALS', default=50000)

# Logging - More restrictive in production
LOGGING['root']['level'] = 'WARNING'
LOGGING['loggers']['django']['level'] = 'WARNING'
LOGGING['loggers']['apps']['level'] = 'INFO'
