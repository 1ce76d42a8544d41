from django.apps import AppConfig


class CommonConfig(AppConfig):
    name = "core.common"
    verbose_name = "Shared helpers"
