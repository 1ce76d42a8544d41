"""The eight minimisation problems as local vertex conditions.

Each condition looks at a vertex's own value and how many neighbors carry each value
(c[0]..c[3]). Every condition is monotone in the counts, which is what lets the search
decide feasibility from counts capped at 2 plus the number of still unlabelled neighbors.
"""

from collections.abc import Callable
from dataclasses import dataclass
from core._compat import StrEnum
from functools import cache
from itertools import product

from core.graphs.graph import Graph, VertexSet
from core.labelings import validators
from core.labelings.types import Labeling
from core.labelings.validators import Verdict

Counts = tuple[int, int, int, int]

COUNT_CAP = 2
FREE_CAP = 3


class Parameter(StrEnum):
    RDRD = "rdrd"
    DR = "dr"
    ROMAN = "roman"
    RROMAN = "rroman"
    DOM = "dom"
    RDOM = "rdom"
    TWO_DOM = "2dom"
    RTWO_DOM = "r2dom"


def _double_roman(value: int, c: Counts) -> bool:
    if value == 0:
        return c[3] >= 1 or c[2] >= 2
    if value == 1:
        return c[2] + c[3] >= 1
    return True


def _restrained_double_roman(value: int, c: Counts) -> bool:
    return _double_roman(value, c) and (value != 0 or c[0] >= 1)


def _roman(value: int, c: Counts) -> bool:
    return value != 0 or c[2] >= 1


def _restrained_roman(value: int, c: Counts) -> bool:
    return value != 0 or (c[2] >= 1 and c[0] >= 1)


def _dominating(value: int, c: Counts) -> bool:
    return value != 0 or c[1] >= 1


def _restrained_dominating(value: int, c: Counts) -> bool:
    return value != 0 or (c[1] >= 1 and c[0] >= 1)


def _two_dominating(value: int, c: Counts) -> bool:
    return value != 0 or c[1] >= 2


def _restrained_two_dominating(value: int, c: Counts) -> bool:
    return value != 0 or (c[1] >= 2 and c[0] >= 1)


@dataclass(frozen=True)
class Problem:
    parameter: Parameter
    symbol: str
    # branching order; also the alphabet
    values: tuple[int, ...]
    condition: Callable[[int, Counts], bool]
    labeling_check: Callable[[Graph, Labeling], Verdict] | None = None
    set_check: Callable[[Graph, VertexSet], Verdict] | None = None

    @property
    def is_set_problem(self) -> bool:
        return self.set_check is not None

    def trivial_upper_bound(self, n: int) -> int:
        """Weight of a labeling that is always valid: all 2 for the double Roman problems, all 1 otherwise."""
        return 2 * n if 3 in self.values else n

    def check(self, graph: Graph, witness: Labeling | VertexSet) -> Verdict:
        if isinstance(witness, VertexSet):
            return self.set_check(graph, witness)
        return self.labeling_check(graph, witness)


PROBLEMS: dict[Parameter, Problem] = {
    problem.parameter: problem
    for problem in (
        Problem(Parameter.RDRD, "γ_rdR", (0, 3, 2, 1), _restrained_double_roman, labeling_check=validators.check_rdrd),
        Problem(Parameter.DR, "γ_dR", (0, 3, 2, 1), _double_roman, labeling_check=validators.check_drd),
        Problem(Parameter.ROMAN, "γ_R", (0, 2, 1), _roman, labeling_check=validators.check_roman),
        Problem(Parameter.RROMAN, "γ_rR", (0, 2, 1), _restrained_roman, labeling_check=validators.check_restrained_roman),
        Problem(Parameter.DOM, "γ", (0, 1), _dominating, set_check=validators.check_dominating),
        Problem(Parameter.RDOM, "γ_r", (0, 1), _restrained_dominating, set_check=validators.check_restrained_dominating),
        Problem(Parameter.TWO_DOM, "γ₂", (0, 1), _two_dominating, set_check=validators.check_two_dominating),
        Problem(
            Parameter.RTWO_DOM,
            "γ_r2",
            (0, 1),
            _restrained_two_dominating,
            set_check=validators.check_restrained_two_dominating,
        ),
    )
}


def table_index(value: int, c0: int, c1: int, c2: int, c3: int, free: int) -> int:
    return ((((value * 3 + c0) * 3 + c1) * 3 + c2) * 3 + c3) * (FREE_CAP + 1) + free


@cache
def feasibility_table(parameter: Parameter) -> bytes:
    """table[table_index(...)] is 1 when some labeling of the `free` open neighbors can still
    satisfy the vertex. Counts are capped at COUNT_CAP, free neighbors at FREE_CAP."""
    problem = PROBLEMS[parameter]
    table = bytearray(4 * 3**4 * (FREE_CAP + 1))
    caps = range(COUNT_CAP + 1)
    for value, c0, c1, c2, c3, free in product(range(4), caps, caps, caps, caps, range(FREE_CAP + 1)):
        for extra in _extensions(problem.values, free):
            counts = (c0 + extra[0], c1 + extra[1], c2 + extra[2], c3 + extra[3])
            if problem.condition(value, counts):
                table[table_index(value, c0, c1, c2, c3, free)] = 1
                break
    return bytes(table)


def _extensions(values: tuple[int, ...], free: int) -> list[Counts]:
    found = []
    for counts in product(range(free + 1), repeat=4):
        if sum(counts) <= free and all(counts[value] == 0 for value in range(4) if value not in values):
            found.append(counts)
    return found


@cache
def closed_neighborhood_demand(parameter: Parameter) -> tuple[tuple[int, ...], int]:
    """Least weight a closed neighborhood can carry, per centre value and over all centre values."""
    problem = PROBLEMS[parameter]
    demand = []
    for value in range(4):
        if value not in problem.values:
            demand.append(0)
            continue
        cheapest = min(
            value + sum(count * label for label, count in enumerate(extra))
            for extra in _extensions(problem.values, 4 * COUNT_CAP)
            if all(count <= COUNT_CAP for count in extra) and problem.condition(value, extra)
        )
        demand.append(cheapest)
    return tuple(demand), min(demand[value] for value in problem.values)
