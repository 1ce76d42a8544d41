"""Depth-first branch and bound shared by all eight parameters.

Vertices are labeled one at a time. After every assignment the new vertex and its labeled
neighbors are checked against the problem's feasibility table, so a vertex fails as soon as
its still-open neighbors can no longer satisfy it. Lower bounds come from a fixed 2-packing
(vertices with pairwise disjoint closed neighborhoods) and from the total unmet demand.

The incumbent starts one above the trivial upper bound and only strictly better leaves
replace it, so the reported witness is the first optimum in branching order.
"""

import logging
import time
from datetime import timedelta

from django.core.exceptions import ValidationError

from core.common.exceptions import BudgetExhausted
from core.common.utils import iter_bits
from core.graphs.graph import Graph, VertexSet
from core.labelings.types import Labeling

from .problems import COUNT_CAP, FREE_CAP, PROBLEMS, Parameter, closed_neighborhood_demand, feasibility_table
from .types import Engine, SolveResult

logger = logging.getLogger(__name__)


class _FloorReached(Exception):
    pass


def branching_order(graph: Graph) -> list[int]:
    """Start at a maximum-degree vertex, then repeatedly take the vertex with the most already
    ordered neighbors (ties: higher degree, then lower index)."""
    if graph.n == 0:
        return []
    degrees = graph.degrees
    order = [min(range(graph.n), key=lambda v: (-degrees[v], v))]
    placed = 1 << order[0]
    while len(order) < graph.n:
        best = min(
            (v for v in range(graph.n) if not (placed >> v) & 1),
            key=lambda v: (-(graph.masks[v] & placed).bit_count(), -degrees[v], v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def two_packing(graph: Graph) -> list[int]:
    """Greedy maximal set of vertices with pairwise disjoint closed neighborhoods, smallest
    closed neighborhood first."""
    chosen = []
    used = 0
    for v in sorted(range(graph.n), key=lambda v: (graph.degrees[v], v)):
        closed = graph.closed_mask(v)
        if not closed & used:
            chosen.append(v)
            used |= closed
    return chosen


class BranchAndBound:
    def __init__(self, graph: Graph, parameter: Parameter, *, budget: int, floor: int = 0):
        if graph.n == 0:
            raise ValidationError("cannot solve on the null graph", code="range")
        self.graph = graph
        self.problem = PROBLEMS[parameter]
        self.budget = budget
        self.table = feasibility_table(parameter)
        self.demand, self.least_demand = closed_neighborhood_demand(parameter)
        self.order = branching_order(graph)
        self.packing = two_packing(graph)

        n = graph.n
        self.label = [-1] * n
        self.counts = [[0, 0, 0, 0] for _ in range(n)]
        self.free = list(graph.degrees)
        self.closed = [0] * n
        self.weight = 0
        self.unassigned = graph.all_mask

        self.nodes = 0
        self.best = self.problem.trivial_upper_bound(n) + 1
        self.best_labels: tuple[int, ...] | None = None
        self.floor = max(floor, self._lower_bound())

    def _feasible(self, v: int) -> bool:
        c = self.counts[v]
        index = (
            (
                ((self.label[v] * 3 + min(c[0], COUNT_CAP)) * 3 + min(c[1], COUNT_CAP)) * 3
                + min(c[2], COUNT_CAP)
            )
            * 3
            + min(c[3], COUNT_CAP)
        ) * (FREE_CAP + 1) + min(self.free[v], FREE_CAP)
        return bool(self.table[index])

    def _assign(self, v: int, value: int) -> bool:
        self.label[v] = value
        self.weight += value
        self.closed[v] += value
        self.unassigned &= ~(1 << v)
        ok = True
        for u in self.graph.adjacency[v]:
            self.counts[u][value] += 1
            self.free[u] -= 1
            self.closed[u] += value
            if ok and self.label[u] >= 0 and not self._feasible(u):
                ok = False
        return ok and self._feasible(v)

    def _unassign(self, v: int, value: int) -> None:
        for u in self.graph.adjacency[v]:
            self.counts[u][value] -= 1
            self.free[u] += 1
            self.closed[u] -= value
        self.closed[v] -= value
        self.weight -= value
        self.label[v] = -1
        self.unassigned |= 1 << v

    def _need(self, v: int) -> int:
        value = self.label[v]
        return self.least_demand if value < 0 else self.demand[value]

    def _lower_bound(self) -> int:
        packing_gap = 0
        for p in self.packing:
            packing_gap += max(0, self._need(p) - self.closed[p])

        widest = max((self.graph.degrees[u] + 1 for u in iter_bits(self.unassigned)), default=0)
        demand_gap = 0
        if widest:
            unmet = sum(max(0, self._need(v) - self.closed[v]) for v in range(self.graph.n))
            demand_gap = -(-unmet // widest)
        return self.weight + max(packing_gap, demand_gap)

    def _search(self, depth: int) -> None:
        if depth == len(self.order):
            self.best = self.weight
            self.best_labels = tuple(self.label)
            logger.debug("%s incumbent %s after %s nodes", self.problem.parameter, self.best, self.nodes)
            if self.best <= self.floor:
                raise _FloorReached
            return
        v = self.order[depth]
        for value in self.problem.values:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted(parameter=str(self.problem.parameter), budget=self.budget, nodes_explored=self.nodes - 1)
            if self._assign(v, value) and self._lower_bound() < self.best:
                self._search(depth + 1)
            self._unassign(v, value)

    def run(self) -> SolveResult:
        started = time.perf_counter()
        logger.debug(
            "Searching %s on n=%s m=%s, floor %s, packing of %s",
            self.problem.parameter,
            self.graph.n,
            self.graph.m,
            self.floor,
            len(self.packing),
        )
        try:
            self._search(0)
        except _FloorReached:
            logger.debug("%s stopped at its floor %s", self.problem.parameter, self.floor)

        if self.best_labels is None:
            # Unreachable: the trivial labeling is always valid and never pruned.
            raise RuntimeError(f"{self.problem.parameter} search finished without a witness")

        if self.problem.is_set_problem:
            witness: Labeling | VertexSet = VertexSet.of(self.graph.n, (v for v, x in enumerate(self.best_labels) if x))
        else:
            witness = Labeling(self.best_labels)
        elapsed = timedelta(seconds=time.perf_counter() - started)
        logger.debug("%s = %s in %s nodes (%s)", self.problem.parameter, self.best, self.nodes, elapsed)
        return SolveResult(
            parameter=self.problem.parameter,
            value=self.best,
            witness=witness,
            nodes_explored=self.nodes,
            elapsed=elapsed,
            engine=Engine.BRANCH_AND_BOUND,
        )


def branch_and_bound(graph: Graph, parameter: Parameter, *, budget: int, floor: int = 0) -> SolveResult:
    return BranchAndBound(graph, parameter, budget=budget, floor=floor).run()
