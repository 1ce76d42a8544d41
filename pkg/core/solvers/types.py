from dataclasses import dataclass
from datetime import timedelta
from core._compat import StrEnum

from core.graphs.graph import VertexSet
from core.labelings.types import Labeling

from .problems import Parameter


class Engine(StrEnum):
    AUTO = "auto"
    BRANCH_AND_BOUND = "bb"
    TREE = "tree"
    BRUTE_FORCE = "brute"


@dataclass(frozen=True)
class SolveResult:
    parameter: Parameter
    value: int
    witness: Labeling | VertexSet
    nodes_explored: int
    elapsed: timedelta
    engine: Engine
