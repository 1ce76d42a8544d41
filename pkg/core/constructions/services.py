import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from core._compat import StrEnum
from typing import Any

from django.core.exceptions import ValidationError

from core.graphs.generators import random_connected_graph, random_tree
from core.graphs.graph import Graph
from core.graphs.graph6 import to_graph6

from . import families

logger = logging.getLogger(__name__)


class Family(StrEnum):
    STAR = "star"
    DOUBLE_STAR = "double_star"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    HEAWOOD = "heawood"
    PETERSEN = "petersen"
    H_N = "h_n"
    HAMMING = "hamming"
    SHARPNESS_H = "sharpness_H"
    SHARPNESS_H_PRIME = "sharpness_H_prime"
    GADGET = "gadget"
    T1 = "T1"
    T2 = "T2"
    THETA = "theta"
    OMEGA = "omega"
    RANDOM_GRAPH = "random_graph"
    RANDOM_TREE = "random_tree"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: Mapping[str, Any] = field(default_factory=dict)

    def describe(self) -> dict[str, Any]:
        """JSON-friendly provenance; graph arguments appear as graph6."""
        return {
            "family": str(self.family),
            "params": {
                key: to_graph6(value).decode() if isinstance(value, Graph) else value
                for key, value in sorted(self.params.items())
            },
        }


@dataclass(frozen=True)
class Construction:
    graph: Graph
    spec: FamilySpec


# Parameter kinds: "int", "graph", "str", "int_tuple", "int_map", "prob".
PARAMETERS: dict[Family, dict[str, str]] = {
    Family.STAR: {"n": "int"},
    Family.DOUBLE_STAR: {"p": "int", "q": "int"},
    Family.PATH: {"n": "int"},
    Family.CYCLE: {"n": "int"},
    Family.COMPLETE: {"n": "int"},
    Family.COMPLETE_BIPARTITE: {"a": "int", "b": "int"},
    Family.HEAWOOD: {},
    Family.PETERSEN: {},
    Family.H_N: {"n": "int"},
    Family.HAMMING: {"p": "int"},
    Family.SHARPNESS_H: {"s": "int", "p": "int", "q": "int"},
    Family.SHARPNESS_H_PRIME: {"h": "graph"},
    Family.GADGET: {"g": "graph"},
    Family.T1: {"p": "int", "q": "int", "subdivisions": "int"},
    Family.T2: {"skeleton": "graph", "attach": "int_map"},
    Family.THETA: {"variant": "str", "h": "graph"},
    Family.OMEGA: {"variant": "str", "h": "graph", "targets": "int_tuple", "i": "int"},
    Family.RANDOM_GRAPH: {"n": "int", "p": "prob"},
    Family.RANDOM_TREE: {"n": "int"},
}

OPTIONAL_PARAMETERS: dict[Family, frozenset[str]] = {
    Family.T1: frozenset({"subdivisions"}),
    Family.T2: frozenset({"attach"}),
    Family.THETA: frozenset({"h"}),
    Family.OMEGA: frozenset({"targets", "i"}),
    Family.RANDOM_GRAPH: frozenset({"p"}),
}

BUILDERS: dict[Family, Callable[..., Graph]] = {
    Family.STAR: families.star,
    Family.DOUBLE_STAR: families.double_star,
    Family.PATH: families.path,
    Family.CYCLE: families.cycle,
    Family.COMPLETE: families.complete,
    Family.COMPLETE_BIPARTITE: families.complete_bipartite,
    Family.HEAWOOD: families.heawood,
    Family.PETERSEN: families.petersen,
    Family.H_N: families.h_n,
    Family.HAMMING: families.hamming,
    Family.SHARPNESS_H: families.sharpness_H,
    Family.SHARPNESS_H_PRIME: families.sharpness_H_prime,
    Family.GADGET: families.hardness_gadget,
    Family.T1: families.family_T1,
    Family.T2: lambda skeleton, attach=None: families.family_T2(skeleton, attach),
    Family.THETA: families.family_theta,
    Family.OMEGA: lambda variant, h, targets=(), i=None: families.family_omega(variant, h, targets=targets, i=i),
}


def construct(spec: FamilySpec, *, seed: int = 0) -> Construction:
    """Build the graph a FamilySpec names; `seed` only matters for the random families."""
    expected = PARAMETERS[spec.family]
    unknown = set(spec.params) - set(expected)
    if unknown:
        raise ValidationError(f"{spec.family} does not take {', '.join(sorted(unknown))}", code="precondition")
    missing = set(expected) - set(spec.params) - OPTIONAL_PARAMETERS.get(spec.family, frozenset())
    if missing:
        raise ValidationError(f"{spec.family} needs {', '.join(sorted(missing))}", code="precondition")

    if spec.family is Family.RANDOM_GRAPH:
        graph = random_connected_graph(spec.params["n"], spec.params.get("p", 0.5), seed)
        spec = FamilySpec(spec.family, {**spec.params, "seed": seed})
    elif spec.family is Family.RANDOM_TREE:
        graph = random_tree(spec.params["n"], seed)
        spec = FamilySpec(spec.family, {**spec.params, "seed": seed})
    else:
        graph = BUILDERS[spec.family](**spec.params)

    logger.debug("Constructed %s with %s vertices and %s edges", spec.family, graph.n, graph.m)
    return Construction(graph=graph, spec=spec)
