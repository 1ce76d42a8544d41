from django.apps import AppConfig


class LabelingsConfig(AppConfig):
    name = "core.labelings"
    verbose_name = "Labelings"
