from core.solvers.services import solve
from core.workbench.base import ENGINE_CHOICES, PARAMETER_CHOICES, WorkbenchCommand
from core.workbench.inputs import load_graphs
from core.workbench.reports import json_line, solve_record, witness_text


class Command(WorkbenchCommand):
    help = "Compute one domination parameter exactly, with a witness"

    def add_arguments(self, parser):
        parser.add_argument("graph6", nargs="?", help="Graph in graph6; omit to read --file or standard input")
        parser.add_argument("--file", help="File with one graph6 record per line, '-' for standard input")
        parser.add_argument("--param", choices=PARAMETER_CHOICES, default="rdrd")
        parser.add_argument("--engine", choices=ENGINE_CHOICES, default=None, help="Default: RDRD_DEFAULT_ENGINE")
        self.add_budget_argument(parser)
        self.add_json_argument(parser)

    def run(self, **options):
        graphs = load_graphs(options["graph6"], options["file"])
        for graph6, graph in graphs:
            result = solve(graph, options["param"], budget=options["budget"], engine=options["engine"])
            if options["json"]:
                self.stdout.write(json_line(solve_record(graph6, result)), ending="")
                continue
            if len(graphs) > 1:
                self.stdout.write(f"# {graph6}")
            self.stdout.write(f"value={result.value}")
            self.stdout.write(witness_text(result.witness), ending="")
