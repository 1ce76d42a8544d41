import math
from collections import deque
from dataclasses import dataclass

from core.common.utils import iter_bits

from .graph import Graph, VertexSet


@dataclass(frozen=True)
class GraphPredicates:
    is_connected: bool
    is_tree: bool
    regular_degree: int | None
    is_triangle_free: bool
    is_claw_free: bool
    min_degree: int
    max_degree: int
    leaves: VertexSet
    support_vertices: VertexSet
    strong_support_vertices: VertexSet
    universal_vertices: VertexSet


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Hop distances from `source`; unreachable vertices get -1."""
    distances = [-1] * graph.n
    distances[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in graph.adjacency[v]:
            if distances[u] < 0:
                distances[u] = distances[v] + 1
                queue.append(u)
    return distances


def reach_mask(graph: Graph, source: int, within: int | None = None) -> int:
    """Bit set of vertices reachable from `source` inside the vertex set `within`."""
    within = graph.all_mask if within is None else within
    seen = 1 << source
    frontier = seen
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= graph.masks[v]
        frontier = grown & within & ~seen
        seen |= frontier
    return seen


def components(graph: Graph) -> list[VertexSet]:
    found = []
    left = graph.all_mask
    while left:
        root = (left & -left).bit_length() - 1
        part = reach_mask(graph, root)
        found.append(VertexSet(graph.n, part))
        left &= ~part
    return found


def is_connected(graph: Graph) -> bool:
    return graph.n > 0 and reach_mask(graph, 0) == graph.all_mask


def is_tree(graph: Graph) -> bool:
    return is_connected(graph) and graph.m == graph.n - 1


def has_isolated_vertex(graph: Graph, within: int) -> bool:
    """True when some vertex of `within` has no neighbor inside `within`."""
    return any(not graph.masks[v] & within for v in iter_bits(within))


def girth(graph: Graph) -> int | float:
    """Length of a shortest cycle, `math.inf` for forests."""
    best: int | float = math.inf
    for root in range(graph.n):
        distances = [-1] * graph.n
        parents = [-1] * graph.n
        distances[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * distances[v] + 1 >= best:
                break
            for u in graph.adjacency[v]:
                if distances[u] < 0:
                    distances[u] = distances[v] + 1
                    parents[u] = v
                    queue.append(u)
                elif parents[v] != u:
                    best = min(best, distances[u] + distances[v] + 1)
    return best


def is_triangle_free(graph: Graph) -> bool:
    return not any(graph.masks[u] & graph.masks[v] for u, v in graph.edges())


def is_claw_free(graph: Graph) -> bool:
    for center in range(graph.n):
        around = graph.masks[center]
        for a in iter_bits(around):
            # candidates after `a` that are not adjacent to it
            rest = around & ~graph.masks[a] & ~((2 << a) - 1)
            for b in iter_bits(rest):
                if rest & ~graph.masks[b] & ~((2 << b) - 1):
                    return False
    return True


def regular_degree(graph: Graph) -> int | None:
    if graph.n == 0 or len(set(graph.degrees)) != 1:
        return None
    return graph.degrees[0]


def universal_vertices(graph: Graph) -> VertexSet:
    return VertexSet.of(graph.n, (v for v in range(graph.n) if graph.degrees[v] == graph.n - 1))


def leaves(graph: Graph) -> VertexSet:
    return VertexSet.of(graph.n, (v for v in range(graph.n) if graph.degrees[v] == 1))


def support_vertices(graph: Graph, *, strong: bool = False) -> VertexSet:
    leaf_mask = leaves(graph).mask
    needed = 2 if strong else 1
    return VertexSet.of(graph.n, (v for v in range(graph.n) if (graph.masks[v] & leaf_mask).bit_count() >= needed))


def is_star(graph: Graph) -> bool:
    """K_{1,n-1} for n >= 2; K_2 counts."""
    if graph.n < 2 or not is_tree(graph):
        return False
    return graph.n - 1 in graph.degrees


def predicates(graph: Graph) -> GraphPredicates:
    return GraphPredicates(
        is_connected=is_connected(graph),
        is_tree=is_tree(graph),
        regular_degree=regular_degree(graph),
        is_triangle_free=is_triangle_free(graph),
        is_claw_free=is_claw_free(graph),
        min_degree=min(graph.degrees, default=0),
        max_degree=max(graph.degrees, default=0),
        leaves=leaves(graph),
        support_vertices=support_vertices(graph),
        strong_support_vertices=support_vertices(graph, strong=True),
        universal_vertices=universal_vertices(graph),
    )
