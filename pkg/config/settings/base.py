"""
Base settings for the dxbayes project.
"""
import os
from pathlib import Path

import environ

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# Environment variables
env = environ.Env(
    DEBUG=(bool, False)
)

# API Configuration
API_VERSION = 'v1'

# Read .env file
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env('SECRET_KEY', default='django-insecure-change-this-in-production')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = env('DEBUG')

ALLOWED_HOSTS = env.list('ALLOWED_HOSTS', default=[])

# Application definition
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.staticfiles',

    # Third party apps
    'rest_framework',
    'drf_yasg',

    # Local apps
    'apps.finite_prob',
    'apps.bayes_core',
    'apps.diagnostics',
    'apps.sequential',
    'apps.reports',
    'apps.api',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'whitenoise.middleware.WhiteNoiseMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'config.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'config.wsgi.application'
ASGI_APPLICATION = 'config.asgi.application'

# No database: every computation is a pure function over request data.
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Static files (Swagger/ReDoc assets)
STATIC_URL = 'static/'
STATIC_ROOT = os.path.join(BASE_DIR, 'staticfiles')

STORAGES = {
    'staticfiles': {
        'BACKEND': 'whitenoise.storage.CompressedManifestStaticFilesStorage',
    },
}

# Django REST Framework
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_THROTTLE_CLASSES': [
        'rest_framework.throttling.AnonRateThrottle',
    ],
    'DEFAULT_THROTTLE_RATES': {
        'anon': '1000/hour',
    },
    'DEFAULT_VERSIONING_CLASS': 'rest_framework.versioning.URLPathVersioning',
    'DEFAULT_VERSION': 'v1',
    'ALLOWED_VERSIONS': ['v1'],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
}

# Toolkit configuration
DXBAYES = {
    'LOG_SPACE_THRESHOLD': env.int('DXBAYES_LOG_SPACE_THRESHOLD', default=30),
    'NORMALIZATION_TOLERANCE': env.float('DXBAYES_NORMALIZATION_TOLERANCE', default=1e-12),
    'MAX_CI_EVENTS': env.int('DXBAYES_MAX_CI_EVENTS', default=20),
    'MAX_CONFIDENCE_TESTS': env.int('DXBAYES_MAX_CONFIDENCE_TESTS', default=10000),
    'DEFAULT_MAX_TESTS': env.int('DXBAYES_DEFAULT_MAX_TESTS', default=50),
    'SIMULATION_WORKERS': env.int('DXBAYES_SIMULATION_WORKERS', default=1),
    'MAX_API_TRIALS': env.int('DXBAYES_MAX_API_TRIALS', default=200000),
    'TABLE_DECIMAL_PLACES': env.int('DXBAYES_TABLE_DECIMAL_PLACES', default=4),
    'PREVALENCE_DECIMAL_PLACES': env.int('DXBAYES_PREVALENCE_DECIMAL_PLACES', default=3),
    'DIAGNOSTIC_DECIMAL_PLACES': env.int('DXBAYES_DIAGNOSTIC_DECIMAL_PLACES', default=3),
    'REGIONS_FIXTURE': env(
        'DXBAYES_REGIONS_FIXTURE',
        default=os.path.join(BASE_DIR, 'apps', 'reports', 'fixtures', 'unaids_2018_adult_prevalence.csv'),
    ),
    'SCENARIO_SCHEMA_VERSION': 1,
}

# Logging
LOG_LEVEL = env('LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

# Security Settings
SECURE_BROWSER_XSS_FILTER = True
SECURE_CONTENT_TYPE_NOSNIFF = True
X_FRAME_OPTIONS = 'DENY'
