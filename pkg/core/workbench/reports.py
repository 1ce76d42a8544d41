"""Rendering for command output.

Human output is a rich table rendered without colour at a fixed width so it is stable
across terminals; `--json` output is one sorted-key JSON object per line.
"""

import io
import json
from fractions import Fraction
from typing import Any

from rich.console import Console
from rich.table import Table

from core.analysis.types import BoundEntry, BoundReport, FamilyTag
from core.graphs.graph import VertexSet
from core.labelings.formats import format_labeling, format_vertex_set
from core.labelings.types import Labeling
from core.solvers.problems import PROBLEMS, Parameter
from core.solvers.types import SolveResult

CONSOLE_WIDTH = 100


def render_table(title: str | None, columns: list[str], rows: list[list[Any]]) -> str:
    table = Table(title=title, show_lines=False)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*("" if cell is None else str(cell) for cell in row))
    buffer = io.StringIO()
    console = Console(file=buffer, width=CONSOLE_WIDTH, no_color=True, highlight=False, force_terminal=False)
    console.print(table)
    return buffer.getvalue()


def json_line(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n"


def _rational(value: Fraction | None) -> str | None:
    return None if value is None else str(value)


def witness_values(witness: Labeling | VertexSet) -> list[int]:
    return list(witness.members) if isinstance(witness, VertexSet) else list(witness.values)


def witness_text(witness: Labeling | VertexSet) -> str:
    return format_vertex_set(witness) if isinstance(witness, VertexSet) else format_labeling(witness)


def solve_record(graph6: str, result: SolveResult) -> dict[str, Any]:
    return {
        "graph6": graph6,
        "param": str(result.parameter),
        "value": result.value,
        "engine": str(result.engine),
        "nodes_explored": result.nodes_explored,
        "witness": witness_values(result.witness),
    }


def parameters_rows(table: dict[Parameter, int]) -> list[list[Any]]:
    return [[str(parameter), PROBLEMS[parameter].symbol, value] for parameter, value in table.items()]


def parameters_record(graph6: str, table: dict[Parameter, int]) -> dict[str, Any]:
    return {"graph6": graph6, "parameters": {str(parameter): value for parameter, value in table.items()}}


def bound_record(graph6: str, entry: BoundEntry) -> dict[str, Any]:
    return {
        "graph6": graph6,
        "bound": entry.name,
        "applicable": entry.applicable,
        "lhs": _rational(entry.lhs),
        "rhs": _rational(entry.rhs),
        "holds": entry.holds,
        "cites": entry.cites,
        "reason": entry.reason,
    }


def bounds_rows(report: BoundReport) -> list[list[Any]]:
    rows = []
    for entry in report.entries:
        if entry.applicable:
            rows.append([entry.name, "yes", entry.lhs, entry.rhs, "holds" if entry.holds else "FAILS", entry.cites])
        else:
            rows.append([entry.name, "no", None, None, None, entry.reason])
    return rows


def tag_record(graph6: str, scope: str, tag: FamilyTag) -> dict[str, Any]:
    return {
        "graph6": graph6,
        "scope": scope,
        "classification": str(tag.classification),
        "variant": tag.variant,
        "value": tag.value,
        "evidence": {key: list(value) if isinstance(value, tuple) else value for key, value in tag.evidence.items()},
    }
