from django.core.exceptions import ValidationError

from .graph import MAX_ORDER, Graph


def _check_combined(order: int) -> None:
    if order > MAX_ORDER:
        raise ValidationError(f"combined order {order} exceeds the supported maximum {MAX_ORDER}", code="range")


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """`first` keeps 0..n1-1, `second` is shifted to n1..n1+n2-1."""
    _check_combined(first.n + second.n)
    shift = first.n
    return Graph(first.n + second.n, first.masks + tuple(mask << shift for mask in second.masks))


def join(first: Graph, second: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    _check_combined(first.n + second.n)
    shift = first.n
    left = (1 << first.n) - 1
    right = ((1 << second.n) - 1) << shift
    return Graph(
        first.n + second.n,
        tuple(mask | right for mask in first.masks) + tuple((mask << shift) | left for mask in second.masks),
    )


def cartesian_product(first: Graph, second: Graph) -> Graph:
    """Vertex (a, b) is numbered a * n2 + b."""
    _check_combined(first.n * second.n)
    width = second.n
    edges = []
    for a in range(first.n):
        for b, c in second.edges():
            edges.append((a * width + b, a * width + c))
    for a, c in first.edges():
        for b in range(width):
            edges.append((a * width + b, c * width + b))
    return Graph.from_edges(first.n * width, edges)


def complement(graph: Graph) -> Graph:
    full = graph.all_mask
    return Graph(graph.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(graph.masks)))


def attach_pendants(graph: Graph, counts: dict[int, int]) -> Graph:
    """Hang `counts[v]` new leaves on each `v`, numbered after the originals in ascending `v`."""
    edges = list(graph.edges())
    order = graph.n
    for v in sorted(counts):
        if not 0 <= v < graph.n:
            raise ValidationError(f"attachment target {v} is not a vertex", code="precondition")
        if counts[v] < 0:
            raise ValidationError(f"attachment count for {v} is negative", code="precondition")
        for _ in range(counts[v]):
            edges.append((v, order))
            order += 1
    _check_combined(order)
    return Graph.from_edges(order, edges)
