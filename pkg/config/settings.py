"""
Django settings for the squares project.

The project has no database and no web surface: Django provides the
settings layer, the management-command CLI, forms validation and the
test runner for the `squares` app.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed or served; Django still expects a value.
SECRET_KEY = 'squares-offline-computation-key'

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'squares',
]

MIDDLEWARE = []

# No models: computations are exact and results go to stdout or the rank cache.
DATABASES = {}

# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging: records go to stdout through the commands, diagnostics to stderr.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'squares': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}


# Search defaults; every value can be overridden by a command flag.

SQUARES = {
    'HEIGHT': 10 ** 4,
    'DESCENT_BOX': 10 ** 3,
    'THUE_DMAX': 100,
    'THUE_BOX': 50,
    'TABLE_PMAX': 47,
    'WORKERS': 1,
    'CACHE_PATH': None,
}
