"""Definition-level checks for the labeling and vertex-set domination variants.

These do not share code with the solvers so they can serve as an independent check on them.
"""

from dataclasses import dataclass

from django.core.exceptions import ValidationError

from core.common.utils import iter_bits
from core.graphs.graph import Graph, VertexSet

from .types import Labeling


@dataclass(frozen=True)
class Verdict:
    valid: bool
    kind: str
    vertex: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return f"valid {self.kind}"
        return f"invalid {self.kind}: vertex {self.vertex} {self.reason}"


@dataclass(frozen=True)
class SetVerdicts:
    dominating: bool
    restrained_dominating: bool
    two_dominating: bool
    restrained_two_dominating: bool


def _double_roman_failure(graph: Graph, labeling: Labeling) -> tuple[int, str] | None:
    _, _, twos, threes = labeling.level_masks
    for v, value in enumerate(labeling.values):
        around = graph.masks[v]
        if value == 0 and not around & threes and (around & twos).bit_count() < 2:
            return v, "is labeled 0 without a neighbor labeled 3 or two neighbors labeled 2"
        if value == 1 and not around & (twos | threes):
            return v, "is labeled 1 without a neighbor labeled 2 or 3"
    return None


def _restraint_failure(graph: Graph, outside: int) -> tuple[int, str] | None:
    for v in iter_bits(outside):
        if not graph.masks[v] & outside:
            return v, "is isolated among the zero-labeled vertices"
    return None


def _verdict(kind: str, failure: tuple[int, str] | None) -> Verdict:
    if failure is None:
        return Verdict(True, kind)
    return Verdict(False, kind, *failure)


def check_drd(graph: Graph, labeling: Labeling) -> Verdict:
    labeling.bind(graph)
    return _verdict("DRD", _double_roman_failure(graph, labeling))


def check_rdrd(graph: Graph, labeling: Labeling) -> Verdict:
    labeling.bind(graph)
    failure = _double_roman_failure(graph, labeling) or _restraint_failure(graph, labeling.level_masks[0])
    return _verdict("RDRD", failure)


def _roman_failure(graph: Graph, labeling: Labeling) -> tuple[int, str] | None:
    labeling.bind(graph)
    if 3 in labeling.values:
        raise ValidationError("Roman labelings take values 0..2 only", code="range")
    twos = labeling.level_masks[2]
    for v, value in enumerate(labeling.values):
        if value == 0 and not graph.masks[v] & twos:
            return v, "is labeled 0 without a neighbor labeled 2"
    return None


def check_roman(graph: Graph, labeling: Labeling) -> Verdict:
    return _verdict("RD", _roman_failure(graph, labeling))


def check_restrained_roman(graph: Graph, labeling: Labeling) -> Verdict:
    failure = _roman_failure(graph, labeling) or _restraint_failure(graph, labeling.level_masks[0])
    return _verdict("RRD", failure)


def _bind_set(graph: Graph, vertices: VertexSet) -> int:
    if vertices.n != graph.n:
        raise ValidationError(f"vertex set covers {vertices.n} vertices but the graph has {graph.n}", code="unbound")
    return graph.all_mask & ~vertices.mask


def _domination_failure(graph: Graph, vertices: VertexSet, needed: int) -> tuple[int, str] | None:
    for v in iter_bits(_bind_set(graph, vertices)):
        if (graph.masks[v] & vertices.mask).bit_count() < needed:
            noun = "neighbor" if needed == 1 else "neighbors"
            return v, f"lies outside the set with fewer than {needed} {noun} in it"
    return None


def check_dominating(graph: Graph, vertices: VertexSet) -> Verdict:
    return _verdict("dominating set", _domination_failure(graph, vertices, 1))


def check_restrained_dominating(graph: Graph, vertices: VertexSet) -> Verdict:
    failure = _domination_failure(graph, vertices, 1) or _restraint_failure(graph, _bind_set(graph, vertices))
    return _verdict("restrained dominating set", failure)


def check_two_dominating(graph: Graph, vertices: VertexSet) -> Verdict:
    return _verdict("2-dominating set", _domination_failure(graph, vertices, 2))


def check_restrained_two_dominating(graph: Graph, vertices: VertexSet) -> Verdict:
    failure = _domination_failure(graph, vertices, 2) or _restraint_failure(graph, _bind_set(graph, vertices))
    return _verdict("restrained 2-dominating set", failure)


def is_drd(graph: Graph, labeling: Labeling) -> bool:
    return check_drd(graph, labeling).valid


def is_rdrd(graph: Graph, labeling: Labeling) -> bool:
    return check_rdrd(graph, labeling).valid


def is_roman(graph: Graph, labeling: Labeling) -> bool:
    return check_roman(graph, labeling).valid


def is_restrained_roman(graph: Graph, labeling: Labeling) -> bool:
    return check_restrained_roman(graph, labeling).valid


def set_validators(graph: Graph, vertices: VertexSet) -> SetVerdicts:
    return SetVerdicts(
        dominating=check_dominating(graph, vertices).valid,
        restrained_dominating=check_restrained_dominating(graph, vertices).valid,
        two_dominating=check_two_dominating(graph, vertices).valid,
        restrained_two_dominating=check_restrained_two_dominating(graph, vertices).valid,
    )
