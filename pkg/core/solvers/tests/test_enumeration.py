import pytest

from core.common.exceptions import CeilingExceeded
from core.constructions.families import complete, cycle, path, star
from core.labelings.types import Labeling
from core.labelings.validators import is_rdrd
from core.solvers.brute_force import brute_force
from core.solvers.enumeration import enumerate_optimal_rdrd
from core.solvers.problems import Parameter


def test_k2_optima():
    assert list(enumerate_optimal_rdrd(complete(2))) == [Labeling((1, 2)), Labeling((2, 1))]


def test_triangle_optima_are_the_rotations_of_one_three():
    assert list(enumerate_optimal_rdrd(cycle(3))) == [
        Labeling((0, 0, 3)),
        Labeling((0, 3, 0)),
        Labeling((3, 0, 0)),
    ]


def test_every_yielded_labeling_is_optimal():
    graph = path(5)
    optimum = brute_force(graph, Parameter.RDRD).value

    optima = list(enumerate_optimal_rdrd(graph))

    assert optima
    assert len(set(optima)) == len(optima)
    assert all(labeling.weight == optimum and is_rdrd(graph, labeling) for labeling in optima)


def test_ceiling_is_checked_before_iteration():
    with pytest.raises(CeilingExceeded) as excinfo:
        enumerate_optimal_rdrd(path(9))
    assert excinfo.value.ceiling == 8

    with pytest.raises(CeilingExceeded):
        enumerate_optimal_rdrd(star(5), ceiling=4)


def test_brute_force_ceiling():
    with pytest.raises(CeilingExceeded):
        brute_force(path(11), Parameter.DOM)
