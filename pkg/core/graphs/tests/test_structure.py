import math
from itertools import combinations

import networkx as nx
from hypothesis import given

from core.graphs.graph import Graph
from core.graphs.graph6 import parse_graph6
from core.graphs.structure import (
    bfs_distances,
    components,
    girth,
    has_isolated_vertex,
    is_claw_free,
    is_connected,
    is_star,
    is_tree,
    is_triangle_free,
    leaves,
    predicates,
    regular_degree,
    support_vertices,
    universal_vertices,
)

from .strategies import graphs

PETERSEN = Graph.from_networkx(nx.petersen_graph())
HEAWOOD = Graph.from_networkx(nx.heawood_graph())


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_girth_examples():
    assert girth(parse_graph6("C~")) == 3
    assert girth(PETERSEN) == 5
    assert girth(HEAWOOD) == 6
    assert girth(path(4)) == math.inf
    assert girth(Graph.empty(3)) == math.inf


@given(graphs())
def test_girth_agrees_with_networkx(graph):
    assert girth(graph) == nx.girth(graph.to_networkx())


@given(graphs())
def test_connectivity_agrees_with_networkx(graph):
    nx_graph = graph.to_networkx()
    expected_parts = sorted(sorted(part) for part in nx.connected_components(nx_graph))

    assert sorted(list(part.members) for part in components(graph)) == expected_parts
    if graph.n:
        assert is_connected(graph) == nx.is_connected(nx_graph)
        assert is_tree(graph) == nx.is_tree(nx_graph)


@given(graphs())
def test_triangle_free_agrees_with_networkx(graph):
    assert is_triangle_free(graph) == (sum(nx.triangles(graph.to_networkx()).values()) == 0)


def test_null_graph_is_not_connected():
    assert not is_connected(Graph.empty(0))
    assert not is_tree(Graph.empty(0))


def test_bfs_distances_marks_unreachable():
    graph = Graph.from_edges(4, [(0, 1), (1, 2)])

    assert bfs_distances(graph, 0) == [0, 1, 2, -1]


def test_has_isolated_vertex_within_subset():
    graph = path(4)

    assert not has_isolated_vertex(graph, 0b0011)
    assert has_isolated_vertex(graph, 0b1011)
    assert not has_isolated_vertex(graph, 0)


def test_claw():
    claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

    assert not is_claw_free(claw)
    assert is_claw_free(parse_graph6("C~"))
    assert is_claw_free(path(5))


def test_leaves_and_supports():
    # spider: 0 is the center with two leaves 1, 2 and a path 0-3-4
    spider = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])

    assert leaves(spider).members == (1, 2, 4)
    assert support_vertices(spider).members == (0, 3)
    assert support_vertices(spider, strong=True).members == (0,)


def test_regular_and_universal():
    assert regular_degree(HEAWOOD) == 3
    assert regular_degree(path(3)) is None
    assert regular_degree(Graph.empty(0)) is None
    assert universal_vertices(parse_graph6("Bo")).members == (0,)


def test_star():
    assert is_star(Graph.from_edges(2, [(0, 1)]))
    assert is_star(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not is_star(path(4))
    assert not is_star(Graph.empty(1))


def test_predicates_bundle():
    summary = predicates(PETERSEN)

    assert summary.is_connected
    assert not summary.is_tree
    assert summary.regular_degree == 3
    assert summary.is_triangle_free
    assert summary.min_degree == summary.max_degree == 3
    assert len(summary.leaves) == 0
    assert len(summary.universal_vertices) == 0


def has_induced_claw(graph: nx.Graph) -> bool:
    return any(
        not any(graph.has_edge(a, b) for a, b in combinations(leaves, 2))
        for center in graph
        for leaves in combinations(graph[center], 3)
    )


def test_claw_free_agrees_with_the_atlas():
    # every graph on at most seven vertices
    atlas = [graph for graph in nx.graph_atlas_g() if graph.number_of_nodes()]

    assert len(atlas) == 1252
    for graph in atlas:
        assert is_claw_free(Graph.from_networkx(graph)) is not has_induced_claw(graph), nx.to_graph6_bytes(graph)
