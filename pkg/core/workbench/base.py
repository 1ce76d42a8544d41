from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from core.common.exceptions import BudgetExhausted, CeilingExceeded
from core.solvers.problems import Parameter
from core.solvers.types import Engine

# Exit status: 0 success, 1 refuted/invalid/no certified answer, 2 bad usage or input.
EXIT_FAILURE = 1
EXIT_USAGE = 2

ENGINE_CHOICES = [str(engine) for engine in Engine if engine is not Engine.BRUTE_FORCE]
PARAMETER_CHOICES = [str(parameter) for parameter in Parameter]


class WorkbenchCommand(BaseCommand):
    """Management command whose domain errors become exit statuses.

    Subclasses implement `run`; input errors exit with 2, budget exhaustion with 1.
    """

    def add_budget_argument(self, parser):
        parser.add_argument("--budget", type=int, default=None, help="Branch-and-bound node cap (default: RDRD_BUDGET)")

    def add_json_argument(self, parser):
        parser.add_argument("--json", action="store_true", help="One JSON record per line")

    def run(self, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except (ValidationError, CeilingExceeded) as exc:
            messages = "; ".join(exc.messages) if isinstance(exc, ValidationError) else str(exc)
            raise CommandError(messages, returncode=EXIT_USAGE) from exc
        except BudgetExhausted as exc:
            raise CommandError(str(exc), returncode=EXIT_FAILURE) from exc

    def fail(self, message: str):
        raise CommandError(message, returncode=EXIT_FAILURE)
