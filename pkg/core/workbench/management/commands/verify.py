from django.core.exceptions import ValidationError

from core.graphs.graph6 import parse_graph6
from core.labelings.formats import parse_labeling, parse_vertex_set
from core.solvers.problems import PROBLEMS
from core.workbench.base import PARAMETER_CHOICES, WorkbenchCommand
from core.workbench.inputs import read_text


class Command(WorkbenchCommand):
    help = "Check a labeling or vertex set against a domination definition"

    def add_arguments(self, parser):
        parser.add_argument("graph6")
        witness = parser.add_mutually_exclusive_group(required=True)
        witness.add_argument("--labeling", help="Labeling file ('index label' lines), '-' for standard input")
        witness.add_argument("--set", dest="vertex_set", help="Vertex set file (one index per line), '-' for standard input")
        parser.add_argument("--param", choices=PARAMETER_CHOICES, default="rdrd")

    def run(self, **options):
        graph = parse_graph6(options["graph6"])
        problem = PROBLEMS[options["param"]]
        if problem.is_set_problem:
            if options["vertex_set"] is None:
                raise ValidationError(f"{problem.parameter} is checked on a vertex set; pass --set", code="input")
            witness = parse_vertex_set(read_text(options["vertex_set"]), graph.n)
            size = f"size {len(witness)}"
        else:
            if options["labeling"] is None:
                raise ValidationError(f"{problem.parameter} is checked on a labeling; pass --labeling", code="input")
            witness = parse_labeling(read_text(options["labeling"]), graph.n)
            size = f"weight {witness.weight}"

        verdict = problem.check(graph, witness)
        if not verdict:
            self.stdout.write(verdict.describe())
            self.fail(f"not a valid {verdict.kind}")
        self.stdout.write(f"{verdict.describe()}, {size}")
