import networkx as nx
import pytest
from django.core.exceptions import ValidationError

from core.analysis.small_values import classify_small
from core.analysis.types import Classification
from core.constructions.families import complete, cycle, path, star
from core.graphs.graph import Graph
from core.graphs.structure import is_connected
from core.solvers.problems import Parameter
from core.solvers.services import solve


@pytest.mark.parametrize(
    ("graph", "classification", "value"),
    [
        (complete(1), Classification.RDRD_2_K1, 2),
        (complete(2), Classification.RDRD_3, 3),
        (complete(5), Classification.RDRD_3, 3),
        (path(3), Classification.RDRD_4_THETA, 4),
        (star(4), Classification.RDRD_5_K13, 5),
        (cycle(4), Classification.OTHER, None),
    ],
)
def test_examples(graph, classification, value):
    tag = classify_small(graph)

    assert tag.classification is classification
    assert tag.value == value


def test_universal_vertex_evidence():
    tag = classify_small(complete(4))

    assert tag.variant == "K1_join_H"
    assert tag.evidence == {"universal": 0}
    assert tag.describe() == "RDRD_3(K1_join_H) -> 3"


def test_disconnected_input():
    with pytest.raises(ValidationError) as excinfo:
        classify_small(Graph.empty(2))
    assert excinfo.value.code == "disconnected"


def atlas(max_order: int):
    for nx_graph in nx.graph_atlas_g()[1:]:
        if nx_graph.number_of_nodes() > max_order:
            break
        graph = Graph.from_networkx(nx_graph)
        if is_connected(graph):
            yield graph


def assert_matches_solver(graph: Graph) -> None:
    value = solve(graph, Parameter.RDRD).value
    tag = classify_small(graph)
    if value <= 5:
        assert tag.value == value
    else:
        assert tag.classification is Classification.OTHER


def test_every_small_connected_graph():
    for graph in atlas(6):
        assert_matches_solver(graph)


@pytest.mark.slow
def test_every_connected_graph_on_seven_vertices():
    for graph in atlas(7):
        if graph.n == 7:
            assert_matches_solver(graph)
