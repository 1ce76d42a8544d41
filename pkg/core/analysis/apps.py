from django.apps import AppConfig


class AnalysisConfig(AppConfig):
    name = "core.analysis"
    verbose_name = "Theorem checks"
