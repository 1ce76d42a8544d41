from django.conf import settings
from django.core.exceptions import ValidationError

from core.workbench.base import WorkbenchCommand
from core.workbench.fuzz import Backend, Check, FuzzConfig, Mode, run_fuzz
from core.workbench.reports import json_line, render_table


def _checks(raw: str) -> tuple[Check, ...]:
    try:
        return tuple(Check(name.strip()) for name in raw.split(",") if name.strip())
    except ValueError as exc:
        raise ValidationError(f"unknown check in {raw!r}; choose from {', '.join(Check)}", code="input") from exc


class Command(WorkbenchCommand):
    help = "Re-check the theorems on seeded random graphs"

    def add_arguments(self, parser):
        parser.add_argument("--mode", choices=[str(mode) for mode in Mode], default="graphs")
        parser.add_argument("--n-min", type=int, default=1)
        parser.add_argument("--n-max", type=int, default=7)
        parser.add_argument("--count", type=int, default=100)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--checks", default=",".join(Check), help="Comma-separated subset of checks")
        parser.add_argument("--jobs", type=int, default=None, help="Worker processes (default: RDRD_FUZZ_JOBS)")
        parser.add_argument("--backend", choices=[str(backend) for backend in Backend], default=None)
        self.add_budget_argument(parser)
        self.add_json_argument(parser)

    def run(self, **options):
        config = FuzzConfig(
            n_min=options["n_min"],
            n_max=options["n_max"],
            count=options["count"],
            seed=options["seed"],
            mode=Mode(options["mode"]),
            checks=_checks(options["checks"]),
            budget=options["budget"],
        )
        jobs = settings.RDRD_FUZZ_JOBS if options["jobs"] is None else options["jobs"]
        backend = Backend(options["backend"] or settings.RDRD_FUZZ_BACKEND)
        report = run_fuzz(config, jobs=jobs, backend=backend)

        failures = report.counterexamples + report.inconclusive
        if options["json"]:
            for item in failures:
                self.stdout.write(json_line({**item.__dict__, "check": str(item.check)}), ending="")
            summary = {
                "instances": len(report.instances),
                "counterexamples": len(report.counterexamples),
                "inconclusive": len(report.inconclusive),
                "seed": config.seed,
                "mode": str(config.mode),
            }
            self.stdout.write(json_line(summary), ending="")
        else:
            if failures:
                rows = [
                    [item.index, item.graph6, str(item.check), "inconclusive" if item.inconclusive else "violated", item.detail]
                    for item in failures
                ]
                self.stdout.write(render_table(None, ["#", "graph6", "check", "status", "detail"], rows), ending="")
                for item in report.counterexamples:
                    if item.parameters:
                        table = " ".join(f"{name}={value}" for name, value in item.parameters.items())
                        self.stdout.write(f"# {item.graph6}: {table}")
            self.stdout.write(
                f"{len(report.instances)} instances, {len(report.counterexamples)} counterexamples, "
                f"{len(report.inconclusive)} inconclusive",
            )
        if report.counterexamples:
            self.fail(f"fuzz found {len(report.counterexamples)} counterexamples")
        if report.inconclusive and not options["json"]:
            # nothing refuted, so the run still succeeds
            self.stdout.write(
                f"inconclusive: {len(report.inconclusive)} checks hit the node budget, nothing was refuted",
            )
