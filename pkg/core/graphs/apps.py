from django.apps import AppConfig


class GraphsConfig(AppConfig):
    name = "core.graphs"
    verbose_name = "Graphs"
