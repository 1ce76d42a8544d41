from core.analysis.small_values import classify_small
from core.analysis.trees import classify_tree
from core.graphs.graph6 import parse_graph6
from core.graphs.structure import is_tree
from core.workbench.base import WorkbenchCommand
from core.workbench.reports import json_line, tag_record


class Command(WorkbenchCommand):
    help = "Recognize the small-value and tree families a connected graph belongs to"

    def add_arguments(self, parser):
        parser.add_argument("graph6")
        self.add_json_argument(parser)

    def run(self, **options):
        graph6 = options["graph6"].strip()
        graph = parse_graph6(graph6)
        tags = [("small", classify_small(graph))]
        if is_tree(graph) and graph.n >= 2:
            tags.append(("tree", classify_tree(graph)))
        for scope, tag in tags:
            if options["json"]:
                self.stdout.write(json_line(tag_record(graph6, scope, tag)), ending="")
            else:
                self.stdout.write(f"{scope}: {tag.describe()}")
