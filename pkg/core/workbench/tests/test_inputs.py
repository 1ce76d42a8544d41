from fractions import Fraction

import pytest
from django.core.exceptions import ValidationError

from core.constructions.services import Family
from core.workbench.inputs import load_graphs, parse_family_params


def test_positional_graph6():
    [(record, graph)] = load_graphs(" Bw\n", None)

    assert record == "Bw"
    assert (graph.n, graph.m) == (3, 3)


def test_file_skips_blank_and_comment_lines(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text("# header\n\nC~\n@\n")

    assert [record for record, _ in load_graphs(None, str(source))] == ["C~", "@"]


def test_file_errors_name_the_line(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text("C~\nC\n")

    with pytest.raises(ValidationError) as excinfo:
        load_graphs(None, str(source))
    assert excinfo.value.code == "graph6"
    assert excinfo.value.messages[0].startswith("line 2:")


@pytest.mark.parametrize(
    ("graph6", "path"),
    [("Bw", "graphs.g6"), (None, "missing.g6")],
)
def test_input_errors(graph6, path, tmp_path):
    with pytest.raises(ValidationError) as excinfo:
        load_graphs(graph6, str(tmp_path / path))
    assert excinfo.value.code == "input"


def test_empty_file(tmp_path):
    source = tmp_path / "empty.g6"
    source.write_text("# nothing here\n")

    with pytest.raises(ValidationError) as excinfo:
        load_graphs(None, str(source))
    assert excinfo.value.code == "input"


def test_family_params_are_typed():
    params = parse_family_params(Family.OMEGA, ["variant=O2", "h=Ch", "targets=0,2"])

    assert params["variant"] == "O2"
    assert params["h"].n == 4
    assert params["targets"] == (0, 2)
    assert parse_family_params(Family.T2, ["skeleton=Bo", "attach=0:2,2:1"])["attach"] == {0: 2, 2: 1}
    assert parse_family_params(Family.RANDOM_GRAPH, ["n=5", "p=1/3"])["p"] == Fraction(1, 3)


@pytest.mark.parametrize(
    ("family", "tokens"),
    [
        (Family.PATH, ["n"]),
        (Family.PATH, ["n=four"]),
        (Family.PATH, ["length=4"]),
        (Family.DOUBLE_STAR, ["p=2"]),
    ],
)
def test_family_param_errors(family, tokens):
    with pytest.raises(ValidationError) as excinfo:
        parse_family_params(family, tokens)
    assert excinfo.value.code == "input"
