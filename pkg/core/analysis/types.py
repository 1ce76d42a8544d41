from dataclasses import dataclass, field
from core._compat import StrEnum
from fractions import Fraction

from core.labelings.types import Labeling
from core.solvers.problems import Parameter


class Classification(StrEnum):
    RDRD_2_K1 = "RDRD_2_K1"
    RDRD_3 = "RDRD_3"
    RDRD_4_THETA = "RDRD_4_THETA"
    RDRD_5_OMEGA = "RDRD_5_OMEGA"
    RDRD_5_K13 = "RDRD_5_K13"
    TREE_STAR = "TREE_STAR"
    TREE_T1 = "TREE_T1"
    TREE_T2 = "TREE_T2"
    OTHER = "OTHER"


Evidence = dict[str, int | tuple[int, ...]]


@dataclass(frozen=True)
class FamilyTag:
    classification: Classification
    # restrained double Roman value the tag implies; None for OTHER
    value: int | None = None
    variant: str | None = None
    evidence: Evidence = field(default_factory=dict)

    def describe(self) -> str:
        name = str(self.classification)
        if self.variant:
            name = f"{name}({self.variant})"
        return name if self.value is None else f"{name} -> {self.value}"


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    cites: str
    # every entry reads lhs <= rhs
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    reason: str | None = None

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class BoundReport:
    n: int
    max_degree: int
    parameters: dict[Parameter, int]
    entries: tuple[BoundEntry, ...]

    @property
    def violations(self) -> tuple[BoundEntry, ...]:
        return tuple(entry for entry in self.entries if entry.applicable and not entry.holds)


@dataclass(frozen=True)
class FrameCheck:
    gamma: int
    gamma_r: int
    gamma_r2: int
    gamma_rdrd: int
    is_star: bool

    @property
    def equality_holds(self) -> bool:
        return self.gamma_rdrd == self.gamma + self.gamma_r

    @property
    def condition_holds(self) -> bool:
        return self.is_star or self.gamma_r2 == self.gamma_r == self.gamma


@dataclass(frozen=True)
class ClawFreeCheck:
    # equality family the graph belongs to; None outside them
    family: str | None
    gamma: int
    gamma_r: int
    gamma_rdrd: int

    @property
    def equality_holds(self) -> bool:
        return self.gamma_rdrd == self.gamma + self.gamma_r

    @property
    def consistent(self) -> bool:
        return self.equality_holds == (self.family is not None)


@dataclass(frozen=True)
class GadgetCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class ObservationReport:
    optima: int
    max_zeros: int
    # optima that give a leaf the label 0
    leaf_violations: tuple[Labeling, ...]
    # max-|V_0| optima with an edge inside V_1 or between V_1 and V_0
    structure_violations: tuple[Labeling, ...]

    @property
    def holds(self) -> bool:
        return not self.leaf_violations and not self.structure_violations
