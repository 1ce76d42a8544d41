"""Naive full enumeration, checked with the definition-level validators. Test oracle only."""

import time
from datetime import timedelta
from itertools import combinations, product

from core.common.exceptions import CeilingExceeded
from core.graphs.graph import Graph, VertexSet
from core.labelings.types import Labeling

from .problems import PROBLEMS, Parameter
from .types import Engine, SolveResult

BRUTE_FORCE_CEILING = 10


def brute_force(graph: Graph, parameter: Parameter, *, ceiling: int = BRUTE_FORCE_CEILING) -> SolveResult:
    """Minimum over every labeling (or subset); the witness is the first optimum in natural order:
    subsets by size then lexicographically, labelings lexicographically in vertex order."""
    if graph.n > ceiling:
        raise CeilingExceeded(order=graph.n, ceiling=ceiling)
    problem = PROBLEMS[parameter]
    started = time.perf_counter()
    checked = 0
    best: Labeling | VertexSet | None = None
    best_value = 0

    if problem.is_set_problem:
        for size in range(graph.n + 1):
            for members in combinations(range(graph.n), size):
                checked += 1
                candidate = VertexSet.of(graph.n, members)
                if problem.set_check(graph, candidate):
                    best, best_value = candidate, size
                    break
            if best is not None:
                break
    else:
        for values in product(sorted(problem.values), repeat=graph.n):
            checked += 1
            weight = sum(values)
            if best is not None and weight >= best_value:
                continue
            candidate = Labeling(values)
            if problem.labeling_check(graph, candidate):
                best, best_value = candidate, weight

    return SolveResult(
        parameter=parameter,
        value=best_value,
        witness=best,
        nodes_explored=checked,
        elapsed=timedelta(seconds=time.perf_counter() - started),
        engine=Engine.BRUTE_FORCE,
    )
