from core.solvers.problems import (
    COUNT_CAP,
    FREE_CAP,
    PROBLEMS,
    Parameter,
    closed_neighborhood_demand,
    feasibility_table,
    table_index,
)


def test_every_parameter_has_a_problem():
    assert set(PROBLEMS) == set(Parameter)
    assert PROBLEMS[Parameter.DOM].is_set_problem
    assert not PROBLEMS[Parameter.RDRD].is_set_problem


def test_trivial_upper_bounds():
    assert PROBLEMS[Parameter.RDRD].trivial_upper_bound(5) == 10
    assert PROBLEMS[Parameter.ROMAN].trivial_upper_bound(5) == 5
    assert PROBLEMS[Parameter.RDOM].trivial_upper_bound(5) == 5


def test_feasibility_table_for_restrained_double_roman():
    table = feasibility_table(Parameter.RDRD)

    assert len(table) == 4 * 3**4 * (FREE_CAP + 1)
    # a 0 with a 3-neighbor and a 0-neighbor is done
    assert table[table_index(0, 1, 0, 0, 1, 0)]
    # a 0 with a 3-neighbor still needs a 0-neighbor
    assert not table[table_index(0, 0, 0, 0, 1, 0)]
    assert table[table_index(0, 0, 0, 0, 1, 1)]
    # a 0 seeing nothing needs two open neighbors
    assert not table[table_index(0, 0, 0, 0, 0, 1)]
    assert table[table_index(0, 0, 0, 0, 0, 2)]
    # two 2s and a 0, all capped counts
    assert table[table_index(0, 1, 0, COUNT_CAP, 0, 0)]
    assert not table[table_index(1, 2, 2, 0, 0, 0)]
    assert table[table_index(3, 0, 0, 0, 0, 0)]


def test_closed_neighborhood_demand():
    assert closed_neighborhood_demand(Parameter.RDRD) == ((3, 3, 2, 3), 2)
    assert closed_neighborhood_demand(Parameter.ROMAN) == ((2, 1, 2, 0), 1)
    assert closed_neighborhood_demand(Parameter.DOM) == ((1, 1, 0, 0), 1)
