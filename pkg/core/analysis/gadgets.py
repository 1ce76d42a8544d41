from core.constructions.families import hardness_gadget
from core.graphs.graph import Graph
from core.solvers.problems import Parameter
from core.solvers.services import solve
from core.solvers.types import Engine

from .types import GadgetCheck


def gadget_identity_check(graph: Graph, budget: int | None = None) -> GadgetCheck:
    """Compare gamma_rdR of the gadget graph with 4n + gamma_R of the original."""
    gadget = hardness_gadget(graph)
    lhs = solve(gadget, Parameter.RDRD, budget=budget, engine=Engine.BRANCH_AND_BOUND).value
    rhs = 4 * graph.n + solve(graph, Parameter.ROMAN, budget=budget).value
    return GadgetCheck(lhs=lhs, rhs=rhs)
