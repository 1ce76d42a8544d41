import networkx as nx
import pytest
from django.core.exceptions import ValidationError
from hypothesis import given

from core.graphs.graph import MAX_ORDER, Graph, VertexSet, check_order

from .strategies import graphs


def test_from_edges_builds_symmetric_rows():
    graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])

    assert graph.masks == (0b0010, 0b0101, 0b1010, 0b0100)
    assert graph.m == 3
    assert graph.degrees == (1, 2, 2, 1)
    assert graph.neighbors(1) == (0, 2)
    assert graph.has_edge(2, 1)
    assert not graph.has_edge(0, 3)
    assert graph.closed_mask(0) == 0b0011
    assert list(graph.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_duplicate_edges_collapse():
    assert Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)]).m == 1


@pytest.mark.parametrize(
    "masks",
    [
        (0b01,),  # row count does not match
        (0b01, 0b10),  # self-loops
        (0b10, 0b00),  # asymmetric
        (0b100, 0b000),  # neighbor out of range
    ],
)
def test_invalid_rows_are_rejected(masks):
    with pytest.raises(ValidationError):
        Graph(2, masks)


def test_from_edges_rejects_loops_and_out_of_range_endpoints():
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(0, 3)])


def test_order_range():
    check_order(0)
    check_order(MAX_ORDER)
    with pytest.raises(ValidationError) as excinfo:
        check_order(MAX_ORDER + 1)
    assert excinfo.value.code == "range"


def test_null_graph():
    graph = Graph.empty(0)
    assert graph.m == 0
    assert graph.all_mask == 0
    assert list(graph.edges()) == []


@given(graphs())
def test_networkx_round_trip(graph):
    nx_graph = graph.to_networkx()

    assert nx_graph.number_of_nodes() == graph.n
    assert nx_graph.number_of_edges() == graph.m
    assert Graph.from_networkx(nx_graph) == graph


def test_from_networkx_relabels_sorted_nodes():
    graph = Graph.from_networkx(nx.Graph([(10, 30), (30, 20)]))

    assert sorted(graph.edges()) == [(0, 2), (1, 2)]


def test_vertex_set():
    vertices = VertexSet.of(5, [3, 0, 3])

    assert vertices.members == (0, 3)
    assert len(vertices) == 2
    assert 3 in vertices
    assert 1 not in vertices
    assert list(vertices) == [0, 3]
    assert vertices.complement().members == (1, 2, 4)
    with pytest.raises(ValidationError):
        VertexSet.of(3, [3])
