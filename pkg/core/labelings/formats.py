"""Plain-text exchange formats.

Labelings: one "index label" line per vertex, 0-based ascending indices. Vertex sets: one
member index per line. Blank lines and `#` comments are ignored in both.
"""

from collections.abc import Iterable

from django.core.exceptions import ValidationError

from core.graphs.graph import VertexSet

from .types import Labeling


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].split()
        if body:
            yield number, body


def _integer(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise ValidationError(f"line {number}: {token!r} is not an integer", code="format") from exc


def parse_labeling(text: str, n: int | None = None) -> Labeling:
    values = []
    for number, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise ValidationError(f"line {number}: expected 'index label'", code="format")
        index, value = (_integer(token, number) for token in tokens)
        if index != len(values):
            raise ValidationError(f"line {number}: expected index {len(values)}, got {index}", code="format")
        values.append(value)
    if n is not None and len(values) != n:
        raise ValidationError(f"labeling lists {len(values)} vertices, the graph has {n}", code="unbound")
    return Labeling(tuple(values))


def format_labeling(labeling: Labeling) -> str:
    return "".join(f"{v} {value}\n" for v, value in enumerate(labeling.values))


def parse_vertex_set(text: str, n: int) -> VertexSet:
    members = []
    for number, tokens in _content_lines(text):
        if len(tokens) != 1:
            raise ValidationError(f"line {number}: expected a single vertex index", code="format")
        v = _integer(tokens[0], number)
        if not 0 <= v < n:
            raise ValidationError(f"line {number}: vertex {v} is outside 0..{n - 1}", code="unbound")
        members.append(v)
    return VertexSet.of(n, members)


def format_vertex_set(vertices: VertexSet) -> str:
    return "".join(f"{v}\n" for v in vertices)
