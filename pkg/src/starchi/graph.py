"""Undirected simple graphs stored as bitset adjacency rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Vertex sets are likewise plain int masks internally; :class:`VertexSet`
wraps a mask together with the size of the graph it lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction input (bad endpoint, self-loop)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(parent_size)``, stored as a bit mask."""

    mask: int
    parent_size: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.parent_size:
            raise GraphError(f"vertex set exceeds parent range {self.parent_size}")

    @classmethod
    def of(cls, vertices: Iterable[int], parent_size: int) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < parent_size:
                raise GraphError(f"vertex {v} outside [0, {parent_size})")
        return cls(mask_of(vertices), parent_size)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def to_list(self) -> list[int]:
        return bits_to_list(self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, parent_size={self.parent_size})"


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        rows = tuple(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has neighbours outside [0, {n})")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.rows = rows

    # -- basic queries -------------------------------------------------
    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def complement(self) -> "Graph":
        full = self.all_mask
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.rows)])

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(vertices, self.n)

    # -- dunder --------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, self-loops are rejected."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphError(f"endpoint {w} of edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def induced_subgraph_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    labels = bits_to_list(mask)
    index = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for u in iter_bits(g.rows[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(labels), rows), labels


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[s]`` and the order-preserving map from new to original labels."""
    if not isinstance(s, VertexSet):
        s = VertexSet.of(s, g.n)
    elif s.parent_size != g.n:
        raise GraphError(f"vertex set over {s.parent_size} vertices, graph has {g.n}")
    return induced_subgraph_mask(g, s.mask)


# -- small named graphs, used by tests and demos ----------------------------

def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
