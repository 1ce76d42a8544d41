"""Linear-time restrained double Roman domination on trees.

dp[v][s] is the least weight of a labeling of v's subtree in which every vertex below v is
satisfied and v sits in state s: its label plus whatever it still needs from its parent.
Children are folded in one at a time, so every vertex costs a constant number of
transitions over the ten states.
"""

import logging
import time
from collections import deque
from datetime import timedelta
from enum import IntEnum
from typing import NamedTuple

from django.core.exceptions import ValidationError

from core.graphs.graph import Graph
from core.graphs.structure import is_tree
from core.labelings.types import Labeling

from .problems import Parameter
from .types import Engine, SolveResult

logger = logging.getLogger(__name__)


class Need(IntEnum):
    SAT = 0
    NEED_2_OR_3 = 1
    NEED_3 = 2
    NEED_0 = 3
    NEED_GE2 = 4


class DpState(NamedTuple):
    label: int
    coverage: Need = Need.SAT
    restrained: Need = Need.SAT
    one_needs: Need = Need.SAT


STATES: tuple[DpState, ...] = (
    DpState(0, Need.SAT, Need.SAT),
    DpState(0, Need.SAT, Need.NEED_0),
    DpState(0, Need.NEED_2_OR_3, Need.SAT),
    DpState(0, Need.NEED_2_OR_3, Need.NEED_0),
    DpState(0, Need.NEED_3, Need.SAT),
    DpState(0, Need.NEED_3, Need.NEED_0),
    DpState(1),
    DpState(1, one_needs=Need.NEED_GE2),
    DpState(2),
    DpState(3),
)
INDEX = {state: i for i, state in enumerate(STATES)}

LABEL_ORDER = (0, 3, 2, 1)

# State of a vertex before any child is folded in.
INITIAL = {
    0: INDEX[DpState(0, Need.NEED_3, Need.NEED_0)],
    1: INDEX[DpState(1, one_needs=Need.NEED_GE2)],
    2: INDEX[DpState(2)],
    3: INDEX[DpState(3)],
}

# Fully satisfied states, the only ones allowed at the root.
ROOT_STATES = frozenset(i for i, state in enumerate(STATES) if state == DpState(state.label))


def _absorb(state: DpState, child_label: int) -> DpState:
    if state.label == 0:
        coverage = state.coverage
        if child_label == 3:
            coverage = Need.SAT
        elif child_label == 2:
            coverage = Need.NEED_2_OR_3 if coverage is Need.NEED_3 else Need.SAT
        restrained = Need.SAT if child_label == 0 else state.restrained
        return DpState(0, coverage, restrained)
    if state.label == 1 and child_label >= 2:
        return DpState(1)
    return state


def _parent_settles(state: DpState, parent_label: int) -> bool:
    if state.coverage is Need.NEED_3 and parent_label != 3:
        return False
    if state.coverage is Need.NEED_2_OR_3 and parent_label < 2:
        return False
    if state.restrained is Need.NEED_0 and parent_label != 0:
        return False
    return not (state.one_needs is Need.NEED_GE2 and parent_label < 2)


ABSORB = tuple(tuple(INDEX[_absorb(state, label)] for label in range(4)) for state in STATES)
SETTLES = tuple(tuple(_parent_settles(state, label) for label in range(4)) for state in STATES)
STATES_BY_LABEL = tuple(tuple(i for i, state in enumerate(STATES) if state.label == label) for label in range(4))


def _rooted(tree: Graph, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * tree.n
    order = [root]
    seen = 1 << root
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in tree.adjacency[v]:
            if not (seen >> u) & 1:
                seen |= 1 << u
                parent[u] = v
                order.append(u)
                queue.append(u)
    return order, parent


def gamma_rdrd_tree(tree: Graph, *, root: int = 0) -> SolveResult:
    if not is_tree(tree):
        raise ValidationError("tree engine needs a tree", code="not_tree")
    if not 0 <= root < tree.n:
        raise ValidationError(f"root {root} is not a vertex", code="range")
    started = time.perf_counter()
    n = tree.n
    infinity = 3 * n + 1
    order, parent = _rooted(tree, root)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    cost = [[infinity] * len(STATES) for _ in range(n)]
    # trace[v][label][k] maps a state after folding child k to (state before, child state)
    trace: list[dict[int, list[dict[int, tuple[int, int]]]]] = [{} for _ in range(n)]
    transitions = 0

    for v in reversed(order):
        for label in LABEL_ORDER:
            frontier = {INITIAL[label]: label}
            steps = []
            for child in children[v]:
                options = []
                for child_label in LABEL_ORDER:
                    best = min(
                        (
                            (cost[child][s], s)
                            for s in STATES_BY_LABEL[child_label]
                            if SETTLES[s][label] and cost[child][s] < infinity
                        ),
                        default=None,
                    )
                    if best is not None:
                        options.append((child_label, *best))
                folded: dict[int, int] = {}
                step: dict[int, tuple[int, int]] = {}
                for state, weight in frontier.items():
                    for child_label, child_cost, child_state in options:
                        transitions += 1
                        total = weight + child_cost
                        after = ABSORB[state][child_label]
                        if total < infinity and (after not in folded or total < folded[after]):
                            folded[after] = total
                            step[after] = (state, child_state)
                frontier = folded
                steps.append(step)
            trace[v][label] = steps
            for state, weight in frontier.items():
                cost[v][state] = weight

    root_state = min(
        (s for s in ROOT_STATES if cost[root][s] < infinity),
        key=lambda s: (cost[root][s], LABEL_ORDER.index(STATES[s].label)),
    )
    labels = [0] * n
    pending = [(root, root_state)]
    while pending:
        v, state = pending.pop()
        label = STATES[state].label
        labels[v] = label
        steps = trace[v][label]
        for child, step in zip(reversed(children[v]), reversed(steps)):
            state, child_state = step[state]
            pending.append((child, child_state))

    value = cost[root][root_state]
    elapsed = timedelta(seconds=time.perf_counter() - started)
    logger.debug("tree gamma_rdR = %s on n=%s with %s transitions", value, n, transitions)
    return SolveResult(
        parameter=Parameter.RDRD,
        value=value,
        witness=Labeling(tuple(labels)),
        nodes_explored=transitions,
        elapsed=elapsed,
        engine=Engine.TREE,
    )
