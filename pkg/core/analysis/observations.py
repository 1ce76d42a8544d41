"""Structure shared by all optimal restrained double Roman labelings.

Every leaf gets a positive label, and among the optima with the most zeros the 1-labeled
vertices form an independent set with no neighbor labeled 0.
"""

from collections.abc import Iterable

from core.graphs.graph import Graph
from core.graphs.structure import leaves
from core.labelings.types import Labeling
from core.solvers.enumeration import enumerate_optimal_rdrd

from .types import ObservationReport


def maximize_zeros(optima: Iterable[Labeling]) -> list[Labeling]:
    """The labelings among `optima` with the largest number of zeros."""
    optima = list(optima)
    most = max((labeling.values.count(0) for labeling in optima), default=0)
    return [labeling for labeling in optima if labeling.values.count(0) == most]


def check_observations(graph: Graph, *, ceiling: int | None = None, budget: int | None = None) -> ObservationReport:
    optima = list(enumerate_optimal_rdrd(graph, ceiling=ceiling, budget=budget))
    leaf_mask = leaves(graph).mask
    leaf_violations = tuple(labeling for labeling in optima if labeling.level_masks[0] & leaf_mask)

    structure_violations = []
    widest = maximize_zeros(optima)
    for labeling in widest:
        zeros, ones, _, _ = labeling.level_masks
        for v in labeling.level(1):
            if graph.masks[v] & (ones | zeros):
                structure_violations.append(labeling)
                break

    return ObservationReport(
        optima=len(optima),
        max_zeros=widest[0].values.count(0) if widest else 0,
        leaf_violations=leaf_violations,
        structure_violations=tuple(structure_violations),
    )
