"""Which trees reach the least possible restrained double Roman values n + 1 and n + 2.

Stars give n + 1. Among the others, n + 2 is reached exactly by

* double stars whose centre edge is subdivided at most twice, i.e. trees where two vertices
  dominate everything else, and
* trees admitting a role map V -> {0, 1, 2, 3} where
  - a 1 is a leaf hanging on a 2 or a 3,
  - a 0 has exactly one 0-neighbor, no 1-neighbor, and either one 3-neighbor and no
    2-neighbor or two 2-neighbors and no 3-neighbor,
  - a 2 has exactly one 0-neighbor and no 2- or 3-neighbor,
  - a 3 has at least one 0-neighbor and no 2- or 3-neighbor.

Such a role map is itself a labeling of weight n + 2, since the 0/2/3 vertices form a single
subtree. It is found by a feasibility pass over a rooted orientation.
"""

from collections import deque

from django.core.exceptions import ValidationError

from core.graphs.graph import Graph
from core.graphs.structure import is_star, is_tree

from .types import Classification, FamilyTag

# Counters are capped just above the largest threshold the role rules test.
CAPS = (2, 1, 3, 2)
ROLE_ORDER = (0, 3, 2, 1)

Tally = tuple[int, int, int, int]


def _bump(tally: Tally, role: int) -> Tally:
    counts = list(tally)
    counts[role] = min(counts[role] + 1, CAPS[role])
    return counts[0], counts[1], counts[2], counts[3]


def _role_fits(role: int, tally: Tally, degree: int) -> bool:
    c0, c1, c2, c3 = tally
    if role == 1:
        return degree == 1 and c2 + c3 == 1
    if role == 0:
        return c0 == 1 and c1 == 0 and ((c3 == 1 and c2 == 0) or (c2 == 2 and c3 == 0))
    if role == 2:
        return c0 == 1 and c2 == 0 and c3 == 0
    return c0 >= 1 and c2 == 0 and c3 == 0


def dominating_pair(tree: Graph) -> tuple[int, int] | None:
    full = tree.all_mask
    for u in range(tree.n):
        for v in range(u + 1, tree.n):
            if not full & ~(1 << u) & ~(1 << v) & ~(tree.masks[u] | tree.masks[v]):
                return u, v
    return None


def role_assignment(tree: Graph) -> tuple[int, ...] | None:
    """A role map as described in the module docstring, or None when the tree has none."""
    n = tree.n
    parent = [-1] * n
    order = [0]
    queue = deque([0])
    seen = 1
    while queue:
        v = queue.popleft()
        for u in tree.adjacency[v]:
            if not (seen >> u) & 1:
                seen |= 1 << u
                parent[u] = v
                order.append(u)
                queue.append(u)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    # finals[v][role]: reachable child tallies; steps[v][role][k]: tally -> (previous tally, child role)
    finals: list[dict[int, set[Tally]]] = [{} for _ in range(n)]
    steps: list[dict[int, list[dict[Tally, tuple[Tally, int]]]]] = [{} for _ in range(n)]
    # fits[v][role][parent_role]; index 4 stands for "no parent"
    fits: list[dict[int, list[bool]]] = [{} for _ in range(n)]

    for v in reversed(order):
        degree = tree.degrees[v]
        for role in range(4):
            reachable: dict[Tally, tuple[Tally, int] | None] = {(0, 0, 0, 0): None}
            trail = []
            for child in children[v]:
                allowed = [r for r in ROLE_ORDER if fits[child][r][role]]
                grown: dict[Tally, tuple[Tally, int]] = {}
                for tally in reachable:
                    for child_role in allowed:
                        grown.setdefault(_bump(tally, child_role), (tally, child_role))
                reachable = grown
                trail.append(grown)
            finals[v][role] = set(reachable)
            steps[v][role] = trail
            fits[v][role] = [
                any(_role_fits(role, _bump(tally, parent_role), degree) for tally in reachable)
                for parent_role in range(4)
            ] + [any(_role_fits(role, tally, degree) for tally in reachable)]

    root_role = next((role for role in ROLE_ORDER if fits[0][role][4]), None)
    if root_role is None:
        return None

    roles = [0] * n
    pending = [(0, root_role, 4)]
    while pending:
        v, role, parent_role = pending.pop()
        roles[v] = role
        degree = tree.degrees[v]
        tally = next(
            t
            for t in sorted(finals[v][role])
            if _role_fits(role, t if parent_role == 4 else _bump(t, parent_role), degree)
        )
        for child, step in zip(reversed(children[v]), reversed(steps[v][role])):
            tally, child_role = step[tally]
            pending.append((child, child_role, role))
    return tuple(roles)


def classify_tree(tree: Graph) -> FamilyTag:
    if not is_tree(tree):
        raise ValidationError("tree classification needs a tree", code="not_tree")
    if tree.n < 2:
        raise ValidationError("tree classification needs at least two vertices", code="range")
    n = tree.n
    if is_star(tree):
        return FamilyTag(Classification.TREE_STAR, n + 1, evidence={"center": tree.degrees.index(n - 1)})
    pair = dominating_pair(tree)
    if pair is not None:
        return FamilyTag(Classification.TREE_T1, n + 2, evidence={"centers": pair})
    roles = role_assignment(tree)
    if roles is not None:
        return FamilyTag(Classification.TREE_T2, n + 2, evidence={"roles": roles})
    return FamilyTag(Classification.OTHER)
