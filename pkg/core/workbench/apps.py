from django.apps import AppConfig


class WorkbenchConfig(AppConfig):
    name = "core.workbench"
    verbose_name = "Workbench"
