from django.apps import AppConfig


class SolversConfig(AppConfig):
    name = "core.solvers"
    verbose_name = "Exact solvers"
