from core.solvers.services import parameter_table
from core.workbench.base import WorkbenchCommand
from core.workbench.inputs import load_graphs
from core.workbench.reports import json_line, parameters_record, parameters_rows, render_table


class Command(WorkbenchCommand):
    help = "Compute all eight domination parameters"

    def add_arguments(self, parser):
        parser.add_argument("graph6", nargs="?")
        parser.add_argument("--file", help="File with one graph6 record per line, '-' for standard input")
        self.add_budget_argument(parser)
        self.add_json_argument(parser)

    def run(self, **options):
        for graph6, graph in load_graphs(options["graph6"], options["file"]):
            table = parameter_table(graph, options["budget"])
            if options["json"]:
                self.stdout.write(json_line(parameters_record(graph6, table)), ending="")
            else:
                self.stdout.write(render_table(graph6, ["param", "symbol", "value"], parameters_rows(table)), ending="")
