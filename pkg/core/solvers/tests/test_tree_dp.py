import networkx as nx
import pytest
from django.core.exceptions import ValidationError
from hypothesis import given, settings

from core.constructions.families import complete, cycle, double_star, path, star
from core.graphs.generators import random_tree
from core.graphs.graph import Graph
from core.graphs.tests.strategies import trees
from core.labelings.types import Labeling
from core.labelings.validators import is_rdrd
from core.solvers.branch_and_bound import branch_and_bound
from core.solvers.problems import Parameter
from core.solvers.tree_dp import gamma_rdrd_tree
from core.solvers.types import Engine


@pytest.mark.parametrize(
    ("tree", "value"),
    [
        (complete(1), 2),
        (complete(2), 3),
        (star(8), 9),
        (double_star(2, 2), 8),
        (path(7), 9),
        (path(8), 10),
    ],
)
def test_values(tree, value):
    result = gamma_rdrd_tree(tree)

    assert result.value == value
    assert result.engine is Engine.TREE
    assert result.witness.weight == value
    assert is_rdrd(tree, result.witness)


def test_witness_prefers_labels_in_order_zero_three_two_one():
    assert gamma_rdrd_tree(complete(2)).witness == Labeling((2, 1))


def test_rejects_non_trees():
    with pytest.raises(ValidationError) as excinfo:
        gamma_rdrd_tree(cycle(4))
    assert excinfo.value.code == "not_tree"

    with pytest.raises(ValidationError):
        gamma_rdrd_tree(path(3), root=3)


@settings(max_examples=50, deadline=None)
@given(trees(max_order=10))
def test_root_does_not_change_the_value(tree):
    values = {gamma_rdrd_tree(tree, root=root).value for root in range(tree.n)}

    assert len(values) == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_all_small_trees_agree_with_branch_and_bound(n):
    for nx_tree in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
        tree = Graph.from_networkx(nx_tree)
        result = gamma_rdrd_tree(tree)

        assert result.value == branch_and_bound(tree, Parameter.RDRD, budget=10**7).value
        assert is_rdrd(tree, result.witness)


@pytest.mark.slow
def test_random_trees_agree_with_branch_and_bound():
    for seed in range(500):
        tree = random_tree(1 + seed % 12, seed)

        assert gamma_rdrd_tree(tree).value == branch_and_bound(tree, Parameter.RDRD, budget=10**8).value
