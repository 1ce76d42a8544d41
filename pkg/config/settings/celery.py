import os

from celery import Celery

from config.env import env

# https://docs.celeryproject.org/en/stable/userguide/configuration.html

# Fuzz sweeps can be fanned out to workers: `manage.py fuzz --backend celery`.
CELERY_BROKER_URL = env("CELERY_BROKER_URL", default="memory://")
CELERY_RESULT_BACKEND = env("CELERY_RESULT_BACKEND", default="cache+memory://")

CELERY_TIMEZONE = "UTC"

CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_ACCEPT_CONTENT = ["json"]

# A fuzz instance is a handful of exact solves at desk scale.
CELERY_TASK_SOFT_TIME_LIMIT = env.int("CELERY_TASK_SOFT_TIME_LIMIT", default=300)  # seconds
CELERY_TASK_TIME_LIMIT = env.int("CELERY_TASK_TIME_LIMIT", default=360)  # seconds
CELERY_TASK_MAX_RETRIES = 0

CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=False)

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.django.base")

app = Celery("rdrd-workbench")

app.config_from_object("django.conf:settings", namespace="CELERY")

app.conf.broker_connection_retry_on_startup = True

app.autodiscover_tasks()
