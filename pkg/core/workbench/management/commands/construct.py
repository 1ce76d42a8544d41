import json

from core.constructions.services import Family, FamilySpec, construct
from core.graphs.graph6 import to_graph6
from core.workbench.base import WorkbenchCommand
from core.workbench.inputs import parse_family_params


class Command(WorkbenchCommand):
    help = "Build a named graph family member and print it as graph6"

    def add_arguments(self, parser):
        parser.add_argument("family", choices=[str(family) for family in Family])
        parser.add_argument("params", nargs="*", help="key=value; graphs as graph6, e.g. h=Bw")
        parser.add_argument("--seed", type=int, default=0, help="Seed for the random families")

    def run(self, **options):
        family = Family(options["family"])
        spec = FamilySpec(family, parse_family_params(family, options["params"]))
        construction = construct(spec, seed=options["seed"])
        self.stdout.write(f"# {json.dumps(construction.spec.describe(), sort_keys=True, default=str)}")
        self.stdout.write(to_graph6(construction.graph).decode())
