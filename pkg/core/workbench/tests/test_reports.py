import json
from fractions import Fraction

from core.analysis.types import BoundEntry
from core.constructions.families import path
from core.solvers.problems import Parameter
from core.solvers.services import parameter_table, solve
from core.workbench.reports import bound_record, json_line, render_table, solve_record, witness_text


def test_render_table_is_plain_text():
    table = render_table("title", ["a", "b"], [[1, None], ["x", Fraction(1, 2)]])

    assert "\x1b[" not in table
    assert "title" in table
    assert "1/2" in table


def test_json_line_sorts_keys():
    assert json_line({"b": 1, "a": "γ"}) == '{"a": "γ", "b": 1}\n'


def test_solve_record_lists_set_members():
    result = solve(path(5), Parameter.DOM)
    record = solve_record("path", result)

    assert record["value"] == 2
    assert len(record["witness"]) == 2
    assert witness_text(result.witness).count("\n") == 2


def test_bound_record_writes_rationals_as_strings():
    entry = BoundEntry(name="rest", applicable=True, cites="", lhs=Fraction(32, 3), rhs=Fraction(11))
    record = json.loads(json_line(bound_record("g", entry)))

    assert record["lhs"] == "32/3"
    assert record["rhs"] == "11"
    assert record["holds"] is True


def test_parameter_table_covers_every_parameter():
    assert set(parameter_table(path(4))) == set(Parameter)
