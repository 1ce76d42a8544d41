from django.apps import AppConfig


class ConstructionsConfig(AppConfig):
    name = "core.constructions"
    verbose_name = "Graph families"
