from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from django.core.exceptions import ValidationError

from core.common.utils import bits_to_tuple, iter_bits, tuple_to_bits

# Largest order the extended graph6 length prefix can carry.
MAX_ORDER = 258047


def check_order(n: int) -> None:
    if n < 0 or n > MAX_ORDER:
        raise ValidationError(f"graph order {n} is outside the supported range 0..{MAX_ORDER}", code="range")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Row `masks[v]` is the neighborhood of `v` as a bit set, so edge queries are a shift
    and neighborhood intersections are a single `&`.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        check_order(self.n)
        if len(self.masks) != self.n:
            raise ValidationError("adjacency rows do not match the vertex count", code="invalid")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.masks):
            if mask & ~full or mask < 0:
                raise ValidationError(f"vertex {v} has a neighbor outside 0..{self.n - 1}", code="invalid")
            if (mask >> v) & 1:
                raise ValidationError(f"self-loop at vertex {v}", code="invalid")
            for u in iter_bits(mask):
                if not (self.masks[u] >> v) & 1:
                    raise ValidationError(f"edge {v}-{u} is not symmetric", code="invalid")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        check_order(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}", code="invalid")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}", code="invalid")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bits_to_tuple(mask) for mask in self.masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.masks)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexSet:
    n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValidationError(f"vertex set has members outside 0..{self.n - 1}", code="unbound")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        return cls(n, tuple_to_bits(members))

    @cached_property
    def members(self) -> tuple[int, ...]:
        return bits_to_tuple(self.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool((self.mask >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __repr__(self) -> str:
        return f"VertexSet({set(self.members) or '{}'})"
