import pytest
from django.core.exceptions import ValidationError

from core.graphs.graph import VertexSet
from core.labelings.formats import format_labeling, format_vertex_set, parse_labeling, parse_vertex_set
from core.labelings.types import Labeling


def test_labeling_text():
    text = "# P4\n0 1\n1 2\n\n2 2  # middle\n3 1\n"

    labeling = parse_labeling(text, 4)

    assert labeling == Labeling((1, 2, 2, 1))
    assert format_labeling(labeling) == "0 1\n1 2\n2 2\n3 1\n"


@pytest.mark.parametrize(
    ("text", "code"),
    [
        ("0 1\n2 1\n", "format"),  # index gap
        ("0\n", "format"),
        ("0 x\n", "format"),
        ("0 1\n1 5\n", "range"),
        ("0 1\n", "unbound"),
    ],
)
def test_malformed_labelings(text, code):
    with pytest.raises(ValidationError) as excinfo:
        parse_labeling(text, 2)
    assert excinfo.value.code == code


def test_vertex_set_text():
    vertices = parse_vertex_set("3\n0\n# done\n", 5)

    assert vertices == VertexSet.of(5, [0, 3])
    assert format_vertex_set(vertices) == "0\n3\n"


@pytest.mark.parametrize("text", ["5\n", "-1\n", "1 2\n", "a\n"])
def test_malformed_vertex_sets(text):
    with pytest.raises(ValidationError):
        parse_vertex_set(text, 5)
