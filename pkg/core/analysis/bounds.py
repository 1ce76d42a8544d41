import logging
from fractions import Fraction
from math import isqrt

import networkx as nx
from django.core.exceptions import ValidationError

from core.constructions.families import hamming
from core.graphs.graph import Graph
from core.graphs.structure import (
    girth,
    is_claw_free,
    is_connected,
    is_star,
    is_tree,
    is_triangle_free,
    regular_degree,
)
from core.solvers.problems import Parameter
from core.solvers.services import parameter_table, solve

from .types import BoundEntry, BoundReport, ClawFreeCheck, FrameCheck

logger = logging.getLogger(__name__)


def _entry(name: str, cites: str, lhs: int | Fraction, rhs: int | Fraction) -> BoundEntry:
    return BoundEntry(name=name, applicable=True, cites=cites, lhs=Fraction(lhs), rhs=Fraction(rhs))


def _skipped(name: str, cites: str, reason: str) -> BoundEntry:
    return BoundEntry(name=name, applicable=False, cites=cites, reason=reason)


def evaluate_bounds(graph: Graph, budget: int | None = None) -> BoundReport:
    """Every bound on the restrained double Roman number, each read as lhs <= rhs."""
    if graph.n == 0:
        raise ValidationError("bounds need at least one vertex", code="range")
    table = parameter_table(graph, budget)
    rdrd = table[Parameter.RDRD]
    n = graph.n
    delta = max(graph.degrees)
    connected = is_connected(graph)
    entries = []

    cites = "lower bound via maximum degree and restrained domination"
    if delta >= 1:
        entries.append(_entry("rest", cites, Fraction(2 * n + (delta - 2) * table[Parameter.RDOM], delta), rdrd))
    else:
        entries.append(_skipped("rest", cites, "maximum degree is 0"))

    entries.append(_entry("n_plus_gamma", "upper bound n + domination number", rdrd, n + table[Parameter.DOM]))

    cites = "r-regular, r >= 3, girth >= 6 upper bound"
    r = regular_degree(graph)
    if r is None:
        entries.append(_skipped("regul", cites, "not regular"))
    elif r < 3:
        entries.append(_skipped("regul", cites, f"regular of degree {r} < 3"))
    elif girth(graph) < 6:
        entries.append(_skipped("regul", cites, f"girth {girth(graph)} < 6"))
    else:
        entries.append(_entry("regul", cites, rdrd, 2 * (n - r * r) + 1))

    cites = "connected triangle-free upper bound via restrained Roman domination"
    if not connected:
        entries.append(_skipped("free", cites, "not connected"))
    elif n < 3:
        entries.append(_skipped("free", cites, f"order {n} < 3"))
    elif not is_triangle_free(graph):
        entries.append(_skipped("free", cites, "contains a triangle"))
    else:
        entries.append(_entry("free", cites, rdrd, 2 * table[Parameter.RROMAN] - 2))

    cites = "nontrivial graphs, restrained Roman domination"
    if graph.m:
        entries.append(_entry("nontrivial", cites, rdrd, 2 * table[Parameter.RROMAN] - 1))
    else:
        entries.append(_skipped("nontrivial", cites, "no edges"))

    entries.append(_entry("double_rr", "every graph, restrained Roman domination", rdrd, 2 * table[Parameter.RROMAN]))

    cites = "lower bound domination plus restrained domination"
    if connected:
        entries.append(_entry("frame", cites, table[Parameter.DOM] + table[Parameter.RDOM], rdrd))
    else:
        entries.append(_skipped("frame", cites, "not connected"))

    cites = "connected regular claw-free: equal to gamma + gamma_r only for K1, K2, H_n (n >= 6), K_p x K_p (p >= 3)"
    if not connected:
        entries.append(_skipped("claw_free", cites, "not connected"))
    elif r is None:
        entries.append(_skipped("claw_free", cites, "not regular"))
    elif not is_claw_free(graph):
        entries.append(_skipped("claw_free", cites, "contains an induced claw"))
    else:
        frame = table[Parameter.DOM] + table[Parameter.RDOM]
        family = regular_claw_free_family(graph)
        if family is None:
            # outside the families the frame bound is strict
            entries.append(_entry("claw_free", cites, frame + 1, rdrd))
        else:
            entries.append(_entry("claw_free", cites, rdrd, frame))

    cites = "trees: n + 1 for stars, n + 2 otherwise"
    if is_tree(graph) and n >= 2:
        entries.append(_entry("trees", cites, n + 1 if is_star(graph) else n + 2, rdrd))
    else:
        entries.append(_skipped("trees", cites, "not a tree on at least two vertices"))

    report = BoundReport(n=n, max_degree=delta, parameters=table, entries=tuple(entries))
    for entry in report.violations:
        logger.warning("Bound %s fails: %s > %s", entry.name, entry.lhs, entry.rhs)
    return report


def lattice_violations(table: dict[Parameter, int]) -> list[str]:
    """Order relations between the eight parameters that hold on every graph."""
    pairs = (
        (Parameter.DOM, Parameter.RDOM),
        (Parameter.DOM, Parameter.TWO_DOM),
        (Parameter.TWO_DOM, Parameter.RTWO_DOM),
        (Parameter.ROMAN, Parameter.RROMAN),
        (Parameter.DR, Parameter.RDRD),
    )
    broken = [f"{low} = {table[low]} > {high} = {table[high]}" for low, high in pairs if table[low] > table[high]]
    if table[Parameter.RDRD] > 2 * table[Parameter.RROMAN]:
        broken.append(f"rdrd = {table[Parameter.RDRD]} > 2 * rroman = {2 * table[Parameter.RROMAN]}")
    return broken


def check_frame_equality(graph: Graph, budget: int | None = None) -> FrameCheck:
    if not is_connected(graph):
        raise ValidationError("the frame equality check needs a connected graph", code="disconnected")
    return FrameCheck(
        gamma=solve(graph, Parameter.DOM, budget=budget).value,
        gamma_r=solve(graph, Parameter.RDOM, budget=budget).value,
        gamma_r2=solve(graph, Parameter.RTWO_DOM, budget=budget).value,
        gamma_rdrd=solve(graph, Parameter.RDRD, budget=budget).value,
        is_star=is_star(graph),
    )


def regular_claw_free_family(graph: Graph) -> str | None:
    """Which of K1, K2, H_n (n >= 6) or K_p x K_p (p >= 3) a connected regular graph is, if any.

    A regular graph of degree n - 2 on n vertices is K_n minus a perfect matching, so H_n
    is recognized by its degree alone; K_p x K_p needs an isomorphism test.
    """
    n = graph.n
    r = regular_degree(graph)
    if r is None or not is_connected(graph):
        return None
    if n <= 2:
        return f"K{n}"
    if n >= 6 and r == n - 2:
        return "H_n"
    p = isqrt(n)
    if p >= 3 and p * p == n and r == 2 * (p - 1) and nx.is_isomorphic(graph.to_networkx(), hamming(p).to_networkx()):
        return "K_p x K_p"
    return None


def check_regular_claw_free(graph: Graph, budget: int | None = None) -> ClawFreeCheck:
    """Equality with gamma + gamma_r against membership in the equality families."""
    if not is_connected(graph) or regular_degree(graph) is None or not is_claw_free(graph):
        raise ValidationError("the check needs a connected regular claw-free graph", code="precondition")
    return ClawFreeCheck(
        family=regular_claw_free_family(graph),
        gamma=solve(graph, Parameter.DOM, budget=budget).value,
        gamma_r=solve(graph, Parameter.RDOM, budget=budget).value,
        gamma_rdrd=solve(graph, Parameter.RDRD, budget=budget).value,
    )
