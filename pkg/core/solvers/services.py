import logging
from fractions import Fraction
from math import ceil

from django.conf import settings
from django.core.exceptions import ValidationError

from config.env import env_to_enum
from core.graphs.graph import Graph
from core.graphs.structure import is_tree

from .branch_and_bound import branch_and_bound
from .problems import Parameter
from .tree_dp import gamma_rdrd_tree
from .types import Engine, SolveResult

logger = logging.getLogger(__name__)


def default_engine() -> Engine:
    return env_to_enum(Engine, settings.RDRD_DEFAULT_ENGINE)


def _budget(budget: int | None) -> int:
    budget = settings.RDRD_BUDGET if budget is None else budget
    if budget < 1:
        raise ValidationError(f"budget must be positive, got {budget}", code="range")
    return budget


def restrained_floor(n: int, max_degree: int, gamma_r: int) -> int:
    """ceil((2n + (max_degree - 2) * gamma_r) / max_degree); needs max_degree >= 1."""
    return ceil(Fraction(2 * n + (max_degree - 2) * gamma_r, max_degree))


def solve(
    graph: Graph,
    parameter: Parameter | str,
    *,
    budget: int | None = None,
    engine: Engine | str | None = None,
) -> SolveResult:
    """Exact value and witness of one parameter.

    `auto` hands restrained double Roman domination on trees to the tree DP and everything
    else to branch and bound.
    """
    parameter = Parameter(parameter)
    engine = default_engine() if engine is None else Engine(engine)
    budget = _budget(budget)
    if graph.n == 0:
        raise ValidationError("cannot solve on the null graph", code="range")

    if engine is Engine.AUTO:
        engine = Engine.TREE if parameter is Parameter.RDRD and is_tree(graph) else Engine.BRANCH_AND_BOUND
    if engine is Engine.TREE:
        if parameter is not Parameter.RDRD:
            raise ValidationError(f"the tree engine only computes {Parameter.RDRD}", code="precondition")
        result = gamma_rdrd_tree(graph)
    elif engine is Engine.BRANCH_AND_BOUND:
        floor = 0
        if parameter is Parameter.RDRD and graph.m:
            gamma_r = branch_and_bound(graph, Parameter.RDOM, budget=budget).value
            floor = restrained_floor(graph.n, max(graph.degrees), gamma_r)
        result = branch_and_bound(graph, parameter, budget=budget, floor=floor)
    else:
        raise ValidationError(f"engine {engine} is not available through solve", code="precondition")

    logger.info("%s = %s (%s, %s nodes, %s)", parameter, result.value, result.engine, result.nodes_explored, result.elapsed)
    return result


def gamma_rdrd(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.RDRD, budget=budget, engine=Engine.BRANCH_AND_BOUND)


def gamma_dr(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.DR, budget=budget)


def gamma_roman(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.ROMAN, budget=budget)


def gamma_rroman(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.RROMAN, budget=budget)


def gamma(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.DOM, budget=budget)


def gamma_r(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.RDOM, budget=budget)


def gamma_2(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.TWO_DOM, budget=budget)


def gamma_r2(graph: Graph, budget: int | None = None) -> SolveResult:
    return solve(graph, Parameter.RTWO_DOM, budget=budget)


def parameter_table(graph: Graph, budget: int | None = None) -> dict[Parameter, int]:
    """All eight values, in Parameter order."""
    return {parameter: solve(graph, parameter, budget=budget).value for parameter in Parameter}
