"""Seeded graph families for tests and benchmarks.

Randomness comes from SplitMix64 (Steele, Lea and Flood), a 64-bit
generator defined purely by integer arithmetic, so every graph is
reproducible bit for bit on any platform. Edge probabilities are exact
rationals: a pair becomes an edge when a 64-bit draw ``r`` satisfies
``r * den < num * 2**64``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .fileio import read_graph6
from .graph import Graph, build_graph, complete_graph, iter_bits
from .oracles import find_star_forest_mask
from .starforest import StarForest, parse_pattern

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.next()

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next()
            if r < limit:
                return r % bound


def as_fraction(p) -> Fraction:
    p = Fraction(p) if not isinstance(p, float) else Fraction(str(p))
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    return p


def gnp(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; pairs ``(i, j)``, ``i < j``, drawn in
    lexicographic order, one 64-bit draw each."""
    p = as_fraction(p)
    rng = SplitMix64(seed)
    cut = p.numerator << 64
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next() * p.denominator < cut:
                edges.append((i, j))
    return build_graph(n, edges)


def clique_union(sizes: Sequence[int]) -> Graph:
    """Disjoint union of cliques of the given sizes."""
    edges = []
    start = 0
    for s in sizes:
        if s < 1:
            raise ValueError("clique sizes must be positive")
        edges.extend((start + a, start + b) for a in range(s) for b in range(a + 1, s))
        start += s
    return build_graph(start, edges)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if part[a] != part[b]])


def blowup(g: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``i`` by a clique of ``sizes[i]`` vertices, joined
    completely to the cliques of its neighbours."""
    if len(sizes) != g.n:
        raise ValueError("need one size per vertex")
    if any(s < 1 for s in sizes):
        raise ValueError("blow-up sizes must be positive")
    owner = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(owner)
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if owner[a] == owner[b] or g.has_edge(owner[a], owner[b])
    ]
    return build_graph(n, edges)


def mycielski(g: Graph) -> Graph:
    """Mycielskian: copies ``u_i`` adjacent to ``N(v_i)``, plus a hub ``w``
    adjacent to every ``u_i``. Keeps triangle-freeness, raises chi by one."""
    n = g.n
    edges = list(g.edges())
    for i in range(n):
        edges.extend((n + i, j) for j in iter_bits(g.rows[i]))
        edges.append((n + i, 2 * n))
    return build_graph(2 * n + 1, edges)


# -- declarative specs ----------------------------------------------------------

FAMILIES = ("gnp", "clique_union", "complete_multipartite", "blowup", "mycielski", "rejection_h_free")


@dataclass
class GenSpec:
    """JSON-serialisable recipe for one graph.

    ``base`` (a graph6 string or a nested spec dict) feeds ``blowup`` and
    ``mycielski``; ``rejection_h_free`` wraps the nested spec in ``inner``.
    """

    family: str
    n: int = 0
    p: str = "1/2"
    sizes: list[int] = field(default_factory=list)
    base: str | dict | None = None
    pattern: str | None = None
    seed: int = 0
    max_tries: int = 100
    inner: dict | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.n < 0 or self.max_tries < 1:
            raise ValueError("n must be nonnegative and max_tries positive")

    def to_json(self) -> str:
        data = {key: value for key, value in asdict(self).items() if value not in (None, [])}
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "GenSpec":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown GenSpec fields {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        return cls.from_dict(json.loads(text))

    def with_seed(self, seed: int) -> "GenSpec":
        data = asdict(self)
        data["seed"] = seed
        return GenSpec(**data)


def _base_graph(spec: GenSpec) -> Graph:
    if isinstance(spec.base, dict):
        return generate(GenSpec.from_dict(spec.base))
    if isinstance(spec.base, str):
        return read_graph6(spec.base)
    raise ValueError(f"family {spec.family!r} needs a base graph")


def generate(spec: GenSpec) -> Graph | None:
    """Build the graph described by ``spec`` (``None`` only when rejection
    sampling runs out of tries)."""
    if spec.family == "gnp":
        return gnp(spec.n, spec.p, spec.seed)
    if spec.family == "clique_union":
        return clique_union(spec.sizes)
    if spec.family == "complete_multipartite":
        return complete_multipartite(spec.sizes)
    if spec.family == "blowup":
        return blowup(_base_graph(spec), spec.sizes)
    if spec.family == "mycielski":
        return mycielski(_base_graph(spec))
    if spec.pattern is None or spec.inner is None:
        raise ValueError("rejection_h_free needs 'pattern' and 'inner'")
    return rejection_h_free(GenSpec.from_dict(spec.inner), parse_pattern(spec.pattern), spec.max_tries, spec.seed)


def rejection_h_free(spec: GenSpec, h: StarForest, max_tries: int, seed: int | None = None) -> Graph | None:
    """Redraw ``spec`` with derived seeds until the result is ``h``-free.

    Attempt ``i`` uses the ``i``-th output of ``SplitMix64(seed)``, where
    ``seed`` defaults to ``spec.seed``. Deterministic families are tried once.
    """
    seeds = SplitMix64(spec.seed if seed is None else seed)
    tries = max_tries if spec.family in ("gnp", "rejection_h_free") else 1
    for _ in range(tries):
        g = generate(spec.with_seed(seeds.next()))
        if g is not None and find_star_forest_mask(g.rows, g.all_mask, h) is None:
            return g
    return None


__all__ = [
    "SplitMix64",
    "GenSpec",
    "gnp",
    "clique_union",
    "complete_multipartite",
    "blowup",
    "mycielski",
    "rejection_h_free",
    "generate",
    "complete_graph",
]
