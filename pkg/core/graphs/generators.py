import logging
import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError

from .graph import Graph
from .structure import components, is_connected

logger = logging.getLogger(__name__)

CONNECT_ATTEMPTS = 64


def _check_probability(edge_prob: Fraction | float) -> float:
    if not 0 < edge_prob <= 1:
        raise ValidationError(f"edge probability {edge_prob} must lie in (0, 1]", code="range")
    return float(edge_prob)


def _check_order(n: int) -> None:
    if n < 1:
        raise ValidationError(f"order {n} must be at least 1", code="range")


def _prufer_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return list(nx.from_prufer_sequence(sequence).edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree decoded from a seeded Prüfer sequence."""
    _check_order(n)
    return Graph.from_edges(n, _prufer_tree_edges(n, random.Random(seed)))


def random_connected_graph(n: int, edge_prob: Fraction | float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity.

    Rejection-samples up to CONNECT_ATTEMPTS times, then overlays a random spanning tree on the
    last sample. The same (n, p, seed) always yields the same graph.
    """
    _check_order(n)
    p = _check_probability(edge_prob)
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    for _ in range(CONNECT_ATTEMPTS):
        edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
        graph = Graph.from_edges(n, edges)
        if is_connected(graph):
            return graph
    logger.debug("G(%s, %s) stayed disconnected after %s draws; overlaying a spanning tree", n, p, CONNECT_ATTEMPTS)
    return Graph.from_edges(n, edges + _prufer_tree_edges(n, rng))


def random_regular_graph(n: int, seed: int) -> Graph:
    """Connected random d-regular graph with d drawn from 2..min(5, n-1) and n*d even.

    Falls back to the cycle C_n when no connected sample turns up.
    """
    if n < 3:
        raise ValidationError(f"regular instances need at least 3 vertices, got {n}", code="range")
    rng = random.Random(seed)
    degrees = [d for d in range(2, min(5, n - 1) + 1) if n * d % 2 == 0]
    degree = rng.choice(degrees)
    for _ in range(CONNECT_ATTEMPTS):
        sample = nx.random_regular_graph(degree, n, seed=rng.randrange(2**32))
        graph = Graph.from_networkx(sample)
        if is_connected(graph):
            return graph
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def random_triangle_free_graph(n: int, edge_prob: Fraction | float, seed: int) -> Graph:
    """Connected triangle-free graph.

    Pairs are visited in a shuffled order and kept with probability `edge_prob` when they close
    no triangle; remaining components are then linked, which cannot close a triangle either.
    """
    _check_order(n)
    p = _check_probability(edge_prob)
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    rows = [0] * n
    for u, v in pairs:
        if rows[u] & rows[v] or rng.random() >= p:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    graph = Graph(n, tuple(rows))
    parts = [rng.choice(part.members) for part in components(graph)]
    for u, v in zip(parts, parts[1:]):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))
