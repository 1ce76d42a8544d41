from core.analysis.bounds import evaluate_bounds
from core.graphs.graph6 import parse_graph6
from core.workbench.base import WorkbenchCommand
from core.workbench.reports import bound_record, bounds_rows, json_line, render_table


class Command(WorkbenchCommand):
    help = "Evaluate every bound on the restrained double Roman domination number"

    def add_arguments(self, parser):
        parser.add_argument("graph6")
        self.add_budget_argument(parser)
        self.add_json_argument(parser)

    def run(self, **options):
        graph6 = options["graph6"].strip()
        report = evaluate_bounds(parse_graph6(graph6), options["budget"])
        if options["json"]:
            for entry in report.entries:
                self.stdout.write(json_line(bound_record(graph6, entry)), ending="")
        else:
            columns = ["bound", "applicable", "lhs", "rhs", "result", "note"]
            self.stdout.write(render_table(graph6, columns, bounds_rows(report)), ending="")
        if report.violations:
            self.fail(f"{len(report.violations)} bound(s) violated: {', '.join(entry.name for entry in report.violations)}")
