import pytest
from django.core.exceptions import ValidationError

from core.constructions.families import complete, cycle, heawood, path, star
from core.graphs.graph import Graph, VertexSet
from core.graphs.operators import disjoint_union, join
from core.labelings.types import Labeling
from core.labelings.validators import (
    check_rdrd,
    is_drd,
    is_rdrd,
    is_restrained_roman,
    is_roman,
    set_validators,
)
from core.solvers.problems import Parameter
from core.solvers.services import solve

C4 = cycle(4)
K1_JOIN_2K2 = join(Graph.empty(1), disjoint_union(complete(2), complete(2)))


def test_weight():
    assert Labeling((0, 0, 0, 0)).weight == 0
    assert Labeling((3, 0, 0, 3)).weight == 6
    assert Labeling((2,) * 5).weight == 10


def test_labels_outside_range_are_rejected():
    with pytest.raises(ValidationError) as excinfo:
        Labeling((0, 4))
    assert excinfo.value.code == "range"


def test_levels():
    labeling = Labeling((3, 0, 1, 0, 2))

    assert labeling.level(0).members == (1, 3)
    assert labeling.level(3).members == (0,)
    assert labeling[4] == 2


def test_double_roman():
    assert is_drd(C4, Labeling((3, 0, 0, 3)))
    # the two zeros see one 2 each
    assert not is_drd(C4, Labeling((2, 0, 0, 2)))
    assert is_drd(Graph.empty(1), Labeling((2,)))


def test_restrained_double_roman():
    assert is_rdrd(C4, Labeling((3, 0, 0, 3)))
    assert is_rdrd(path(4), Labeling((1, 2, 2, 1)))
    # leaves labeled 0 are isolated among the zeros
    assert not is_rdrd(star(4), Labeling((3, 0, 0, 0)))


def test_verdict_names_first_failure():
    verdict = check_rdrd(star(4), Labeling((3, 0, 0, 0)))

    assert not verdict
    assert verdict.vertex == 1
    assert verdict.describe() == "invalid RDRD: vertex 1 is isolated among the zero-labeled vertices"
    assert check_rdrd(C4, Labeling((3, 0, 0, 3))).describe() == "valid RDRD"


def test_roman_variants():
    center_two = Labeling((2, 0, 0, 0))

    assert is_roman(star(4), center_two)
    assert not is_restrained_roman(star(4), center_two)
    assert is_restrained_roman(K1_JOIN_2K2, Labeling((2, 0, 0, 0, 0)))
    assert is_roman(C4, Labeling((1, 1, 1, 1)))


def test_roman_rejects_label_three():
    with pytest.raises(ValidationError) as excinfo:
        is_roman(C4, Labeling((3, 0, 0, 3)))
    assert excinfo.value.code == "range"


def test_labeling_must_match_graph_order():
    with pytest.raises(ValidationError) as excinfo:
        is_rdrd(C4, Labeling((3, 0, 0)))
    assert excinfo.value.code == "unbound"


def test_set_validators_on_complete_graphs():
    singleton = VertexSet.of(3, [0])

    assert set_validators(complete(3), singleton).restrained_dominating
    assert set_validators(complete(2), VertexSet.of(2, [0])).dominating
    assert not set_validators(complete(2), VertexSet.of(2, [0])).restrained_dominating


def test_adjacent_pair_on_c4_is_not_two_dominating():
    verdicts = set_validators(C4, VertexSet.of(4, [0, 1]))

    assert verdicts.dominating
    assert not verdicts.two_dominating


def test_heawood_restrained_witness():
    witness = solve(heawood(), Parameter.RDOM).witness

    assert len(witness) == 4
    assert set_validators(heawood(), witness).restrained_dominating
