"""Structural recognition of graphs with restrained double Roman value at most 5.

Each recognizer looks for the shape a labeling of that weight forces: the positive labels
and where the zeros must sit. Checking weights 2, 3, 4, 5 in turn and stopping at the first
match yields the exact value whenever it is at most 5. No solver is involved.
"""

from itertools import combinations

from django.core.exceptions import ValidationError

from core.common.utils import bits_to_tuple
from core.graphs.graph import Graph
from core.graphs.structure import has_isolated_vertex, is_connected

from .types import Classification, FamilyTag


def _solid(graph: Graph, rest: int) -> bool:
    """`rest` is non-empty and induces no isolated vertex."""
    return bool(rest) and not has_isolated_vertex(graph, rest)


def _value_three(graph: Graph, universal: list[int]) -> FamilyTag | None:
    if graph.n == 2:
        return FamilyTag(Classification.RDRD_3, 3, "K2", {"edge": (0, 1)})
    for x in universal:
        if _solid(graph, graph.all_mask & ~(1 << x)):
            return FamilyTag(Classification.RDRD_3, 3, "K1_join_H", {"universal": x})
    return None


def _value_four(graph: Graph, universal: list[int]) -> FamilyTag | None:
    full = graph.all_mask
    if graph.n == 3:
        center = graph.degrees.index(2)
        return FamilyTag(Classification.RDRD_4_THETA, 4, "P3", {"center": center})
    for x, y in combinations(range(graph.n), 2):
        rest = full & ~(1 << x) & ~(1 << y)
        if not rest & ~(graph.masks[x] & graph.masks[y]) and _solid(graph, rest):
            return FamilyTag(
                Classification.RDRD_4_THETA,
                4,
                "K2bar_join",
                {"pair": (x, y), "h": bits_to_tuple(rest)},
            )
    for x in universal:
        for a in range(graph.n):
            rest = full & ~(1 << x) & ~(1 << a)
            if a != x and _solid(graph, rest):
                return FamilyTag(
                    Classification.RDRD_4_THETA,
                    4,
                    "K1_join_K1_plus_H",
                    {"universal": x, "vertex": a, "h": bits_to_tuple(rest)},
                )
    return None


def _value_five(graph: Graph, universal: list[int]) -> FamilyTag | None:
    full = graph.all_mask
    if graph.n == 4 and 3 in graph.degrees:
        return FamilyTag(Classification.RDRD_5_K13, 5, "K13", {"center": graph.degrees.index(3)})

    # a 3 and two 1s: the 3 sees everything
    for x in universal:
        others = [v for v in range(graph.n) if v != x]
        for a, b in combinations(others, 2):
            rest = full & ~(1 << x) & ~(1 << a) & ~(1 << b)
            if _solid(graph, rest):
                return FamilyTag(
                    Classification.RDRD_5_OMEGA,
                    5,
                    "O4",
                    {"universal": x, "pendants": (a, b), "h": bits_to_tuple(rest)},
                )

    # two 2s and a 1: the zeros see both 2s, the 1 sees at least one of them.
    # One graph can fit several variants; the most specific one wins.
    found: dict[str, FamilyTag] = {}
    for x, y in combinations(range(graph.n), 2):
        common = graph.masks[x] & graph.masks[y]
        for z in range(graph.n):
            if z in (x, y):
                continue
            rest = full & ~(1 << x) & ~(1 << y) & ~(1 << z)
            touches_x = graph.has_edge(z, x)
            touches_y = graph.has_edge(z, y)
            if not (touches_x or touches_y) or rest & ~common or not _solid(graph, rest):
                continue
            hub, other = (x, y) if touches_x else (y, x)
            evidence = {"x": hub, "y": other, "z": z, "h": bits_to_tuple(rest)}
            if touches_x and touches_y:
                variant = "O3"
            elif graph.masks[z] & rest:
                variant = "O2"
                evidence["targets"] = bits_to_tuple(graph.masks[z] & rest)
            else:
                variant = "O1"
            found.setdefault(variant, FamilyTag(Classification.RDRD_5_OMEGA, 5, variant, evidence))
    for variant in ("O3", "O2", "O1"):
        if variant in found:
            return found[variant]

    # a 3 and a 2: the zeros all see the 3
    for x in range(graph.n):
        for y in range(graph.n):
            rest = full & ~(1 << x) & ~(1 << y)
            if x != y and not rest & ~graph.masks[x] and _solid(graph, rest):
                return FamilyTag(
                    Classification.RDRD_5_OMEGA,
                    5,
                    "O5",
                    {"x": x, "y": y, "h": bits_to_tuple(rest), "i": (graph.masks[y] & rest).bit_count()},
                )
    return None


def classify_small(graph: Graph) -> FamilyTag:
    if not is_connected(graph):
        raise ValidationError("classification needs a connected graph", code="disconnected")
    if graph.n == 1:
        return FamilyTag(Classification.RDRD_2_K1, 2, "K1")
    universal = [v for v in range(graph.n) if graph.degrees[v] == graph.n - 1]
    for recognizer in (_value_three, _value_four, _value_five):
        tag = recognizer(graph, universal)
        if tag is not None:
            return tag
    return FamilyTag(Classification.OTHER)
