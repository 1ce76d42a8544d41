from collections.abc import Iterator
from itertools import product

from django.conf import settings

from core.common.exceptions import CeilingExceeded
from core.graphs.graph import Graph
from core.labelings.types import Labeling
from core.labelings.validators import is_rdrd

from .branch_and_bound import branch_and_bound
from .problems import Parameter


def enumerate_optimal_rdrd(graph: Graph, *, ceiling: int | None = None, budget: int | None = None) -> Iterator[Labeling]:
    """Every RDRD labeling of minimum weight, each once, in lexicographic order.

    The ceiling is checked before anything is yielded.
    """
    ceiling = settings.RDRD_ENUMERATION_CEILING if ceiling is None else ceiling
    if graph.n > ceiling:
        raise CeilingExceeded(order=graph.n, ceiling=ceiling)
    budget = settings.RDRD_BUDGET if budget is None else budget
    optimum = branch_and_bound(graph, Parameter.RDRD, budget=budget).value
    return _optima(graph, optimum)


def _optima(graph: Graph, optimum: int) -> Iterator[Labeling]:
    for values in product(range(4), repeat=graph.n):
        if sum(values) != optimum:
            continue
        labeling = Labeling(values)
        if is_rdrd(graph, labeling):
            yield labeling
