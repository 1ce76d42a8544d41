import os

from config.env import BASE_DIR, env

env.read_env(os.path.join(BASE_DIR, ".env"))

SECRET_KEY = env.str("DJANGO_SECRET_KEY", default="django-insecure-rdrd-workbench-local-only")

DEBUG = env.bool("DJANGO_DEBUG", default=True)  # type: ignore

# Application definition
LOCAL_APPS = [
    "core.common.apps.CommonConfig",
    "core.graphs.apps.GraphsConfig",
    "core.constructions.apps.ConstructionsConfig",
    "core.labelings.apps.LabelingsConfig",
    "core.solvers.apps.SolversConfig",
    "core.analysis.apps.AnalysisConfig",
    "core.workbench.apps.WorkbenchConfig",
]

THIRD_PARTY_APPS: list[str] = []

INSTALLED_APPS: list[str] = [
    *THIRD_PARTY_APPS,
    *LOCAL_APPS,
]

# The workbench is a command-line tool; nothing is persisted.
DATABASES: dict = {}

USE_TZ = True

TIME_ZONE = "UTC"


from config.settings.logging import *  # noqa
from config.settings.celery import *  # noqa
from config.settings.sentry import *  # noqa
from config.settings.workbench import *  # noqa
