import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from django.core.exceptions import ValidationError

from core.constructions.services import OPTIONAL_PARAMETERS, PARAMETERS, Family
from core.graphs.graph import Graph
from core.graphs.graph6 import parse_graph6


def read_text(path: str) -> str:
    """File contents; `-` reads standard input."""
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}", code="input") from exc


def load_graphs(graph6: str | None, path: str | None) -> list[tuple[str, Graph]]:
    """Graphs named on the command line: one positional graph6 string, or one per line of a file
    (standard input when neither is given)."""
    if graph6 is not None and path is not None:
        raise ValidationError("give either a graph6 string or --file, not both", code="input")
    if graph6 is not None:
        return [(graph6.strip(), parse_graph6(graph6))]
    graphs = []
    for number, line in enumerate(read_text(path or "-").splitlines(), start=1):
        record = line.strip()
        if not record or record.startswith("#"):
            continue
        try:
            graphs.append((record, parse_graph6(record)))
        except ValidationError as exc:
            raise ValidationError(f"line {number}: {'; '.join(exc.messages)}", code="graph6") from exc
    if not graphs:
        raise ValidationError("no graph6 records found", code="input")
    return graphs


def _convert(kind: str, key: str, raw: str) -> Any:
    try:
        if kind == "int":
            return int(raw)
        if kind == "graph":
            return parse_graph6(raw)
        if kind == "prob":
            return Fraction(raw)
        if kind == "int_tuple":
            return tuple(int(token) for token in raw.split(",") if token)
        if kind == "int_map":
            pairs = (token.split(":", 1) for token in raw.split(",") if token)
            return {int(vertex): int(count) for vertex, count in pairs}
    except ValueError as exc:
        raise ValidationError(f"parameter {key}={raw!r} is not a valid {kind}", code="input") from exc
    return raw


def parse_family_params(family: Family, tokens: list[str]) -> dict[str, Any]:
    """`key=value` tokens typed by the family's parameter schema.

    Graphs are graph6 strings, `targets=0,2` lists vertices, `attach=3:1,5:2` maps vertices to
    pendant counts.
    """
    schema = PARAMETERS[family]
    params: dict[str, Any] = {}
    for token in tokens:
        key, separator, raw = token.partition("=")
        if not separator:
            raise ValidationError(f"expected key=value, got {token!r}", code="input")
        if key not in schema:
            expected = ", ".join(schema) or "no parameters"
            raise ValidationError(f"{family} takes {expected}; got {key!r}", code="input")
        params[key] = _convert(schema[key], key, raw)
    missing = set(schema) - set(params) - OPTIONAL_PARAMETERS.get(family, frozenset())
    if missing:
        raise ValidationError(f"{family} needs {', '.join(sorted(missing))}", code="input")
    return params
