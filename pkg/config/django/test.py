from .base import *  # noqa

RDRD_BUDGET = 50_000_000

RDRD_FUZZ_JOBS = 1

CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
