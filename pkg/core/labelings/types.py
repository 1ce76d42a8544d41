from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from django.core.exceptions import ValidationError

from core.graphs.graph import Graph, VertexSet


@dataclass(frozen=True)
class Labeling:
    """Total map from vertices 0..n-1 to {0, 1, 2, 3}."""

    values: tuple[int, ...]

    def __post_init__(self):
        for v, value in enumerate(self.values):
            if value not in (0, 1, 2, 3):
                raise ValidationError(f"vertex {v} has label {value}, expected 0..3", code="range")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Labeling":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    @cached_property
    def weight(self) -> int:
        return sum(self.values)

    @cached_property
    def level_masks(self) -> tuple[int, int, int, int]:
        masks = [0, 0, 0, 0]
        for v, value in enumerate(self.values):
            masks[value] |= 1 << v
        return masks[0], masks[1], masks[2], masks[3]

    def level(self, value: int) -> VertexSet:
        """V_value as a vertex set."""
        return VertexSet(self.n, self.level_masks[value])

    def bind(self, graph: Graph) -> "Labeling":
        if self.n != graph.n:
            raise ValidationError(
                f"labeling covers {self.n} vertices but the graph has {graph.n}",
                code="unbound",
            )
        return self

    def __getitem__(self, v: int) -> int:
        return self.values[v]

