"""Colouring star-forest-free graphs with at most omega^c colours.

The pattern ``H`` is peeled one star at a time. Level 0 is the largest
star, handled directly: a ``K_{1,k}``-free graph has no stable ``k``-set in
any neighbourhood, so its maximum degree is below ``omega^k`` and a greedy
colouring suffices. Every outer level ``(k, c_prev, c)`` removes one star
``S = K_{1,k}`` and handles a graph with clique number ``omega``:

* maximum degree below ``omega^c``: colour greedily;
* otherwise take a vertex ``v`` of maximum degree, peel ``n = omega^(k+1)``
  maximum cliques ``X_1, ..., X_n`` off its neighbourhood ``N``, and split
  the rest of the graph into

  - ``X_0 = N - X`` (clique number at most ``t = |X_n|``), same level;
  - ``{v} + X``, all distinct colours;
  - ``A_Y`` for each stable ``k``-subset ``Y`` of ``X``: vertices with no
    neighbour in ``Y``, which are ``H - S``-free, one level down;
  - ``B``, everything else, with clique number at most ``omega - t``,
    same level.

Each part gets its own palette block, so the union is proper, and the
exponent ``c`` is large enough that the blocks sum to at most ``omega^c``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import EnumerationCapExceeded, InvariantViolation, NotHFree
from .graph import Graph, bits_to_list, induced_subgraph, iter_bits
from .oracles import (
    clique_number,
    clique_number_mask,
    find_star_forest_mask,
    max_clique_mask,
    ramsey_bound,
    stable_subsets,
)
from .starforest import StarForest


# -- exponent ledger --------------------------------------------------------

@dataclass(frozen=True)
class ExponentLevel:
    k: int
    c_prev: int | None
    c: int

    @property
    def is_base(self) -> bool:
        return self.c_prev is None


@dataclass(frozen=True)
class ExponentCertificate:
    """Exponent per recursion level, innermost (base star) first."""

    pattern: StarForest
    levels: tuple[ExponentLevel, ...]
    final_c: int

    def to_dict(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "final_c": self.final_c,
            "levels": [{"k": lv.k, "c_prev": lv.c_prev, "c": lv.c} for lv in self.levels],
        }


def peel_exponent(k: int, c_prev: int) -> int:
    return max(k + 2, max(k + 1, k * (k + 2) + c_prev) + 3)


def compute_exponent(h: StarForest) -> ExponentCertificate:
    """Exponent ledger for ``h``: largest star innermost, the rest peeled in
    descending order of leaf count."""
    if not h:
        return ExponentCertificate(h, (), 0)
    ks = sorted(h.stars, reverse=True)
    c = max(ks[0], 1)
    levels = [ExponentLevel(ks[0], None, c)]
    for k in ks[1:]:
        nxt = peel_exponent(k, c)
        levels.append(ExponentLevel(k, c, nxt))
        c = nxt
    return ExponentCertificate(h, tuple(levels), c)


def verify_exponent_inequality(k: int, c_prev: int, c: int, x_max: int) -> bool:
    """Check ``x^c - (x-1)^c >= 1 + x^(k+1) + x^(k(k+2)+c_prev)`` for every
    integer ``2 <= x <= x_max``."""
    if x_max < 2:
        raise ValueError("x_max must be at least 2")
    e1 = k + 1
    e2 = k * (k + 2) + c_prev
    prev = 1  # (x-1)^c at x = 2
    for x in range(2, x_max + 1):
        cur = x**c
        if cur - prev < 1 + x**e1 + x**e2:
            return False
        prev = cur
    return True


def exponent_sufficient(k: int, c_prev: int, c: int) -> bool:
    """Closed-form test that the inequality holds for all ``x >= 2``:
    ``x^c - (x-1)^c >= x^(c-1)`` and ``1 + x^a + x^b <= x^(max(a,b)+2)``."""
    return c >= max(k + 1, k * (k + 2) + c_prev) + 3


# -- colourings ---------------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self) -> None:
        if any(c < 0 or c >= self.palette_size for c in self.colors):
            raise ValueError("colour outside palette")

    @classmethod
    def from_list(cls, colors: Sequence[int]) -> "Coloring":
        colors = tuple(colors)
        return cls(colors, max(colors, default=-1) + 1)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))


def verify_coloring(g: Graph, col: Coloring) -> bool:
    if len(col.colors) != g.n:
        return False
    return all(col.colors[u] != col.colors[v] for u, v in g.edges())


def verify_bound(g: Graph, col: Coloring, cert: ExponentCertificate) -> bool:
    return col.num_colors <= clique_number(g) ** cert.final_c


def _first_fit(rows: Sequence[int], order: Sequence[int]) -> dict[int, int]:
    colour: dict[int, int] = {}
    classes: list[int] = []
    for v in order:
        for c, cls in enumerate(classes):
            if not cls & rows[v]:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colour[v] = c
    return colour


def greedy_color(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit colouring in ``order`` (default: natural order)."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    colour = _first_fit(g.rows, order)
    return Coloring.from_list([colour[v] for v in range(g.n)])


def degeneracy_order(rows: Sequence[int], mask: int) -> list[int]:
    """Smallest-last order: repeatedly strip a minimum-degree vertex (lowest
    index on ties), then reverse."""
    removed: list[int] = []
    left = mask
    while left:
        best_v, best_d = -1, -1
        for v in iter_bits(left):
            d = (rows[v] & left).bit_count()
            if best_v < 0 or d < best_d:
                best_v, best_d = v, d
        removed.append(best_v)
        left &= ~(1 << best_v)
    removed.reverse()
    return removed


# -- configuration and trace --------------------------------------------------------

@dataclass
class ColorConfig:
    """Knobs for :func:`color_star_forest_free`.

    ``check_h_free=None`` checks the input only when it has at most
    ``auto_check_limit`` vertices. ``threshold_override`` lowers the degree
    threshold that triggers decomposition (testing hook); it is capped at
    ``omega^c`` so the colour bound survives.
    """

    check_h_free: bool | None = None
    threshold_override: int | None = None
    enumeration_cap: int = 10**6
    auto_check_limit: int = 60


GREEDY_LEAF = "GreedyLeaf"
BASE_STAR_LEAF = "BaseStarLeaf"
DECOMPOSE = "Decompose"


@dataclass
class StableBlock:
    y: list[int]
    a_y: list[int]
    fresh: list[int]
    palette: tuple[int, int]
    child: "TraceNode | None" = None


@dataclass
class Decomposition:
    v: int
    neighbourhood: list[int]
    cliques: list[list[int]]
    x0: list[int]
    t: int
    n: int
    blocks: list[StableBlock]
    b: list[int]
    palettes: dict[str, tuple[int, int]]
    x0_child: "TraceNode | None" = None
    b_child: "TraceNode | None" = None
    palette_bound: int = 0

    @property
    def x(self) -> list[int]:
        return sorted(itertools.chain.from_iterable(self.cliques))

    @property
    def a(self) -> list[int]:
        return sorted(set(itertools.chain.from_iterable(blk.a_y for blk in self.blocks)))


@dataclass
class TraceNode:
    """One call of the recursion. Palette ranges inside ``decomposition``
    are relative to this node; ``offset`` is the node's absolute start."""

    kind: str
    vertices: list[int]
    level: int
    k: int | None
    c: int
    omega: int
    colors_used: int
    offset: int = 0
    order: list[int] | None = None
    note: str | None = None
    decomposition: Decomposition | None = None

    def children(self) -> list["TraceNode"]:
        d = self.decomposition
        if d is None:
            return []
        out = [d.x0_child] + [blk.child for blk in d.blocks] + [d.b_child]
        return [ch for ch in out if ch is not None]

    def walk(self):
        yield self
        for ch in self.children():
            yield from ch.walk()

    def to_dict(self) -> dict:
        out: dict = {
            "kind": self.kind,
            "vertices": self.vertices,
            "level": self.level,
            "k": self.k,
            "c": self.c,
            "omega": self.omega,
            "colors_used": self.colors_used,
            "offset": self.offset,
        }
        if self.order is not None:
            out["order"] = self.order
        if self.note is not None:
            out["note"] = self.note
        d = self.decomposition
        if d is not None:
            out["decomposition"] = {
                "v": d.v,
                "N": d.neighbourhood,
                "n": d.n,
                "X": d.cliques,
                "X0": d.x0,
                "t": d.t,
                "Y": [
                    {
                        "Y": blk.y,
                        "A_Y": blk.a_y,
                        "fresh": blk.fresh,
                        "palette": list(blk.palette),
                        "child": blk.child.to_dict() if blk.child else None,
                    }
                    for blk in d.blocks
                ],
                "B": d.b,
                "palettes": {name: list(rng) for name, rng in d.palettes.items()},
                "palette_bound": d.palette_bound,
                "X0_child": d.x0_child.to_dict() if d.x0_child else None,
                "B_child": d.b_child.to_dict() if d.b_child else None,
            }
        return out


@dataclass
class ColoringResult:
    coloring: Coloring
    trace: TraceNode
    certificate: ExponentCertificate
    omega: int
    checked: bool
    bound_guaranteed: bool = field(default=False)

    @property
    def bound(self) -> int:
        return self.omega**self.certificate.final_c


# -- the recursion ------------------------------------------------------------------

class _Recursion:
    def __init__(self, g: Graph, cert: ExponentCertificate, cfg: ColorConfig, checked: bool):
        self.rows = g.rows
        self.levels = cert.levels
        self.patterns = [StarForest(lv.k for lv in cert.levels[: i + 1]) for i in range(len(cert.levels))]
        self.cfg = cfg
        self.checked = checked

    def _fail(self, message: str, node: TraceNode | None = None) -> None:
        raise InvariantViolation(message, node)

    def _leaf(self, kind, vertices, level, omega, order, note=None) -> tuple[dict[int, int], TraceNode]:
        colour = _first_fit(self.rows, order)
        used = max(colour.values(), default=-1) + 1
        lv = self.levels[level] if level >= 0 else None
        node = TraceNode(
            kind=kind,
            vertices=vertices,
            level=level,
            k=lv.k if lv else None,
            c=lv.c if lv else 0,
            omega=omega,
            colors_used=used,
            order=list(order),
            note=note,
        )
        return colour, node

    def colour(self, mask: int, level: int) -> tuple[dict[int, int], TraceNode]:
        rows = self.rows
        vertices = bits_to_list(mask)
        omega = clique_number_mask(rows, mask)
        if omega <= 1:
            return self._leaf(GREEDY_LEAF, vertices, level, omega, vertices)
        if level < 0:
            # Empty pattern: nothing nonempty is H-free; only reachable unchecked.
            return self._leaf(GREEDY_LEAF, vertices, level, omega, degeneracy_order(rows, mask), "empty pattern")

        lv = self.levels[level]
        k, c = lv.k, lv.c
        if lv.is_base:
            return self._base(mask, vertices, level, omega)

        degrees = {v: (rows[v] & mask).bit_count() for v in vertices}
        max_deg = max(degrees.values())
        threshold = omega**c
        if self.cfg.threshold_override is not None:
            threshold = min(threshold, self.cfg.threshold_override)
        if max_deg < threshold:
            colour, node = self._leaf(GREEDY_LEAF, vertices, level, omega, degeneracy_order(rows, mask))
            if node.colors_used > max_deg + 1:
                self._fail("greedy used more than max degree + 1 colours", node)
            return colour, node
        return self._decompose(mask, vertices, level, omega, degrees)

    def _base(self, mask, vertices, level, omega):
        lv = self.levels[level]
        k = lv.k
        colour, node = self._leaf(BASE_STAR_LEAF, vertices, level, omega, degeneracy_order(self.rows, mask))
        if self.checked:
            if k == 0:
                self._fail("nonempty graph reached a single-vertex pattern", node)
            max_deg = max((self.rows[v] & mask).bit_count() for v in vertices)
            if max_deg > ramsey_bound(omega - 1, k):
                self._fail(f"max degree {max_deg} exceeds ramsey_bound({omega - 1}, {k})", node)
            if node.colors_used > omega**lv.c:
                self._fail(f"base case used {node.colors_used} > {omega}^{lv.c} colours", node)
        return colour, node

    def _decompose(self, mask, vertices, level, omega, degrees):
        rows = self.rows
        lv = self.levels[level]
        k, c, c_prev = lv.k, lv.c, lv.c_prev
        v = max(vertices, key=lambda u: (degrees[u], -u))
        nbhd = rows[v] & mask
        n = omega ** (k + 1)

        cliques: list[int] = []
        rem = nbhd
        while len(cliques) < n and rem:
            xi = max_clique_mask(rows, rem)
            cliques.append(xi)
            rem &= ~xi
        if len(cliques) < n:
            if self.cfg.threshold_override is None:
                self._fail(f"neighbourhood of {v} yields only {len(cliques)} of {n} cliques")
            return self._leaf(
                GREEDY_LEAF, vertices, level, omega, degeneracy_order(rows, mask),
                f"decomposition infeasible: {len(cliques)} of {n} cliques",
            )
        x_mask = nbhd & ~rem
        x0 = rem
        t = cliques[-1].bit_count()

        node = TraceNode(DECOMPOSE, vertices, level, k, c, omega, 0)
        sizes = [xi.bit_count() for xi in cliques]
        if any(a < b for a, b in zip(sizes, sizes[1:])):
            self._fail("clique sizes not non-increasing", node)
        if sizes[0] > omega - 1 or t < 1:
            self._fail(f"clique sizes {sizes[0]}..{t} outside [1, {omega - 1}]", node)
        if clique_number_mask(rows, x0) > t:
            self._fail("omega(X_0) exceeds t", node)

        colour: dict[int, int] = {v: 0}
        for i, u in enumerate(iter_bits(x_mask), start=1):
            colour[u] = i
        p = x_mask.bit_count() + 1
        palettes = {"vX": (0, p)}

        x0_child = None
        if x0:
            sub, x0_child = self.colour(x0, level)
            palettes["X0"] = (p, p + x0_child.colors_used)
            for u, col in sub.items():
                colour[u] = p + col
            p += x0_child.colors_used
        else:
            palettes["X0"] = (p, p)

        rest = mask & ~nbhd & ~(1 << v)
        covered = 0
        blocks: list[StableBlock] = []
        verified_free: list[int] = []
        a_start = p
        for count, y in enumerate(stable_subsets(rows, x_mask, k), start=1):
            if count > self.cfg.enumeration_cap:
                raise EnumerationCapExceeded(
                    f"more than {self.cfg.enumeration_cap} stable {k}-subsets of a {x_mask.bit_count()}-vertex X"
                )
            hit = 0
            for u in y:
                hit |= rows[u]
            a_y = rest & ~hit
            if self.checked and a_y and not any(a_y & ~m == 0 for m in verified_free):
                emb = find_star_forest_mask(rows, a_y, self.patterns[level - 1])
                if emb is not None:
                    self._fail(f"G[A_Y] for Y={y} contains the reduced pattern", node)
                verified_free.append(a_y)
            fresh = a_y & ~covered
            covered |= a_y
            child = None
            start = p
            if fresh:
                sub, child = self.colour(fresh, level - 1)
                for u, col in sub.items():
                    colour[u] = p + col
                p += child.colors_used
            blocks.append(StableBlock(y, bits_to_list(a_y), bits_to_list(fresh), (start, p), child))
        palettes["A"] = (a_start, p)

        b_mask = rest & ~covered
        limit = omega**k
        for b in iter_bits(b_mask):
            if (x_mask & ~rows[b]).bit_count() >= limit:
                self._fail(f"vertex {b} of B has at least {limit} non-neighbours in X", node)
        if clique_number_mask(rows, b_mask) > omega - t:
            self._fail("omega(B) exceeds omega - t", node)
        b_child = None
        if b_mask:
            sub, b_child = self.colour(b_mask, level)
            palettes["B"] = (p, p + b_child.colors_used)
            for u, col in sub.items():
                colour[u] = p + col
            p += b_child.colors_used
        else:
            palettes["B"] = (p, p)

        bound = t**c + n * omega + (n * omega) ** k * omega**c_prev + (omega - t) ** c
        node.colors_used = p
        node.decomposition = Decomposition(
            v=v,
            neighbourhood=bits_to_list(nbhd),
            cliques=[bits_to_list(xi) for xi in cliques],
            x0=bits_to_list(x0),
            t=t,
            n=n,
            blocks=blocks,
            b=bits_to_list(b_mask),
            palettes=palettes,
            x0_child=x0_child,
            b_child=b_child,
            palette_bound=bound,
        )
        if len(colour) != len(vertices):
            self._fail("parts do not cover the node's vertices", node)
        if self.checked and not p <= bound <= omega**c:
            self._fail(f"palette accounting failed: {p} colours, bound {bound}, omega^c {omega**c}", node)
        return colour, node


def _set_offsets(node: TraceNode, base: int) -> None:
    node.offset = base
    d = node.decomposition
    if d is None:
        return
    if d.x0_child is not None:
        _set_offsets(d.x0_child, base + d.palettes["X0"][0])
    for blk in d.blocks:
        if blk.child is not None:
            _set_offsets(blk.child, base + blk.palette[0])
    if d.b_child is not None:
        _set_offsets(d.b_child, base + d.palettes["B"][0])


def color_star_forest_free(g: Graph, h: StarForest, cfg: ColorConfig | None = None) -> ColoringResult:
    """Properly colour an ``h``-free graph with at most ``omega(g)^c`` colours,
    ``c`` being ``compute_exponent(h).final_c``.

    Raises :class:`NotHFree` if checking is on and ``g`` contains ``h``,
    :class:`InvariantViolation` if any internal proof step fails, and
    :class:`EnumerationCapExceeded` if stable-subset enumeration is too large.
    With checking off the colouring is still proper, but the colour bound is
    only asserted when the input was verified ``h``-free.
    """
    cfg = cfg or ColorConfig()
    cert = compute_exponent(h)
    checked = cfg.check_h_free if cfg.check_h_free is not None else g.n <= cfg.auto_check_limit
    if checked and g.n:
        emb = find_star_forest_mask(g.rows, g.all_mask, h)
        if emb is not None:
            raise NotHFree(f"graph contains an induced {h}", emb)

    run = _Recursion(g, cert, cfg, checked)
    colour, trace = run.colour(g.all_mask, len(cert.levels) - 1)
    _set_offsets(trace, 0)
    coloring = Coloring.from_list([colour[v] for v in range(g.n)])
    omega = trace.omega
    if not verify_coloring(g, coloring):
        raise InvariantViolation("output colouring is not proper", trace)
    if checked and coloring.num_colors > omega**cert.final_c:
        raise InvariantViolation(f"{coloring.num_colors} colours exceed {omega}^{cert.final_c}", trace)
    return ColoringResult(coloring, trace, cert, omega, checked, bound_guaranteed=checked)


# -- independent audit of a finished trace ------------------------------------

def audit_trace(g: Graph, result: ColoringResult) -> list[str]:
    """Re-derive every trace invariant from scratch with fresh slices and
    oracles. Returns a list of violations (empty when all hold)."""
    problems: list[str] = []
    colors = result.coloring.colors
    levels = result.certificate.levels

    def omega_of(vs) -> int:
        sub, _ = induced_subgraph(g, sorted(vs))
        return clique_number(sub)

    def check(node: TraceNode, where: str) -> None:
        s = set(node.vertices)
        if node.omega != omega_of(s):
            problems.append(f"{where}: recorded omega {node.omega} is wrong")
        used = {colors[u] for u in s}
        if used and (min(used) < node.offset or max(used) >= node.offset + node.colors_used):
            problems.append(f"{where}: colours outside node palette")
        d = node.decomposition
        if d is None:
            return
        k = node.k
        omega = node.omega
        v = d.v
        nb = {u for u in s if g.has_edge(v, u)}
        if v not in s or set(d.neighbourhood) != nb:
            problems.append(f"{where}: N is not the neighbourhood of v")
        if d.n != omega ** (k + 1) or len(d.cliques) != d.n:
            problems.append(f"{where}: expected {omega ** (k + 1)} cliques")
        seen: set[int] = set()
        for i, xi in enumerate(d.cliques):
            if not xi or any(not g.has_edge(a, b) for a, b in itertools.combinations(xi, 2)):
                problems.append(f"{where}: X_{i + 1} is not a nonempty clique")
            if not set(xi) <= nb or seen & set(xi):
                problems.append(f"{where}: X_{i + 1} not disjoint inside N")
            if len(xi) > omega - 1:
                problems.append(f"{where}: X_{i + 1} too large")
            if i and len(xi) > len(d.cliques[i - 1]):
                problems.append(f"{where}: clique sizes increase at X_{i + 1}")
            seen |= set(xi)
        x = seen
        if set(d.x0) != nb - x:
            problems.append(f"{where}: X_0 is not N - X")
        if d.t != len(d.cliques[-1]) or d.t < 1:
            problems.append(f"{where}: bad t")
        if omega_of(d.x0) > d.t:
            problems.append(f"{where}: omega(X_0) > t")
        rest = s - nb - {v}
        expected_y = [
            list(y) for y in itertools.combinations(sorted(x), k)
            if not any(g.has_edge(a, b) for a, b in itertools.combinations(y, 2))
        ]
        if [blk.y for blk in d.blocks] != expected_y:
            problems.append(f"{where}: stable k-subsets of X not enumerated in order")
        a: set[int] = set()
        for blk in d.blocks:
            a_y = {u for u in rest if not any(g.has_edge(u, y) for y in blk.y)}
            if set(blk.a_y) != a_y or set(blk.fresh) != a_y - a:
                problems.append(f"{where}: A_Y wrong for Y={blk.y}")
            a |= a_y
        b = rest - a
        if set(d.b) != b:
            problems.append(f"{where}: B is not V - (A + N + v)")
        parts = [{v}, nb, a, b]
        if sum(map(len, parts)) != len(s) or set().union(*parts) != s:
            problems.append(f"{where}: parts do not partition the node")
        for u in b:
            if sum(1 for w in x if not g.has_edge(u, w)) >= omega**k:
                problems.append(f"{where}: vertex {u} of B has too many non-neighbours in X")
        if omega_of(b) > omega - d.t:
            problems.append(f"{where}: omega(B) > omega - t")
        ranges = [d.palettes["vX"], d.palettes["X0"]] + [blk.palette for blk in d.blocks] + [d.palettes["B"]]
        for (lo1, hi1), (lo2, hi2) in zip(ranges, ranges[1:]):
            if not lo1 <= hi1 == lo2 <= hi2:
                problems.append(f"{where}: palette ranges overlap or have gaps")
                break
        members = [[v] + sorted(x), d.x0] + [blk.fresh for blk in d.blocks] + [d.b]
        for rng, part in zip(ranges, members):
            for u in part:
                if not node.offset + rng[0] <= colors[u] < node.offset + rng[1]:
                    problems.append(f"{where}: vertex {u} coloured outside its part's palette")
        if len({colors[u] for u in [v] + sorted(x)}) != len(x) + 1:
            problems.append(f"{where}: {{v}} + X not coloured distinctly")
        if d.x0_child is not None and d.x0_child.vertices != sorted(d.x0):
            problems.append(f"{where}: X_0 child covers wrong vertices")
        if d.b_child is not None and d.b_child.vertices != sorted(d.b):
            problems.append(f"{where}: B child covers wrong vertices")
        for blk in d.blocks:
            if blk.child is not None:
                if blk.child.vertices != blk.fresh or blk.child.level != node.level - 1:
                    problems.append(f"{where}: A_Y child wrong for Y={blk.y}")
        if node.k != levels[node.level].k:
            problems.append(f"{where}: level/k mismatch")
        for i, ch in enumerate(node.children()):
            check(ch, f"{where}/{i}")

    check(result.trace, "root")
    if not verify_coloring(g, result.coloring):
        problems.append("colouring is not proper")
    return problems
