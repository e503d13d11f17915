"""Exact, exponential-time oracles: cliques, stable sets, chromatic number,
induced star-forest containment and the constructive Ramsey bound.

Everything here works on bitset rows. The ``*_mask`` helpers take the
adjacency rows of a host graph plus a vertex mask, so callers can query an
induced subgraph without slicing it out first.

Ties are always broken towards the lexicographically smallest sorted
vertex list, which keeps results reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvariantViolation, OracleScaleError
from .graph import Graph, VertexSet, bits_to_list, iter_bits
from .starforest import StarForest

Rows = Sequence[int]

DEFAULT_CHROMATIC_CAP = 20


# -- cliques ----------------------------------------------------------------

def _colour_sort(rows: Rows, cand: int) -> tuple[list[int], list[int]]:
    """Greedy colour classes of ``cand``; returns vertices ordered by class
    together with their (1-based) class numbers."""
    order: list[int] = []
    colours: list[int] = []
    colour = 0
    while cand:
        colour += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~rows[v]
            q ^= low
            cand ^= low
            order.append(v)
            colours.append(colour)
    return order, colours


def _colour_bound(rows: Rows, cand: int) -> int:
    colour = 0
    while cand:
        colour += 1
        q = cand
        while q:
            low = q & -q
            q &= ~rows[low.bit_length() - 1]
            q ^= low
            cand ^= low
    return colour


def clique_number_mask(rows: Rows, mask: int) -> int:
    """Size of a largest clique inside ``mask`` (branch and bound, MCQ style)."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, colours = _colour_sort(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= best:
                return
            v = order[i]
            sub = cand & rows[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if mask:
        expand(0, mask)
    return best


def _lex_clique(rows: Rows, cand: int, need: int) -> list[int] | None:
    # Lowest vertex first, so the first hit is the lexicographically least.
    if need == 0:
        return []
    while cand:
        if cand.bit_count() < need or (need > 1 and _colour_bound(rows, cand) < need):
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        rest = _lex_clique(rows, cand & rows[v], need - 1)
        if rest is not None:
            return [v] + rest
    return None


def max_clique_mask(rows: Rows, mask: int) -> int:
    """Lexicographically least maximum clique inside ``mask``, as a mask."""
    size = clique_number_mask(rows, mask)
    found = _lex_clique(rows, mask, size)
    assert found is not None
    out = 0
    for v in found:
        out |= 1 << v
    return out


def max_clique(g: Graph) -> VertexSet:
    return VertexSet(max_clique_mask(g.rows, g.all_mask), g.n)


def clique_number(g: Graph) -> int:
    return clique_number_mask(g.rows, g.all_mask)


def complement_rows(rows: Rows, mask: int) -> list[int]:
    """Rows of the complement of ``G[mask]`` (rows outside ``mask`` are 0)."""
    out = [0] * len(rows)
    for v in iter_bits(mask):
        out[v] = mask & ~rows[v] & ~(1 << v)
    return out


def max_stable_set_mask(rows: Rows, mask: int) -> int:
    return max_clique_mask(complement_rows(rows, mask), mask)


def max_stable_set(g: Graph) -> VertexSet:
    return VertexSet(max_stable_set_mask(g.rows, g.all_mask), g.n)


def stable_subsets(rows: Rows, mask: int, k: int) -> Iterator[list[int]]:
    """All stable ``k``-subsets of ``mask``, sorted, in lexicographic order."""
    if k == 0:
        yield []
        return
    while mask:
        if mask.bit_count() < k:
            return
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        for rest in stable_subsets(rows, mask & ~rows[v], k - 1):
            yield [v] + rest


# -- chromatic number -------------------------------------------------------

def dsatur_colouring(g: Graph) -> list[int]:
    """Heuristic DSATUR colouring; used as the initial upper bound."""
    n = g.n
    rows = g.rows
    colour = [-1] * n
    classes: list[int] = []
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = sum(1 for cls in classes if cls & rows[v])
            key = (sat, rows[v].bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        v = best_v
        for c, cls in enumerate(classes):
            if not cls & rows[v]:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colour[v] = c
    return colour


def chromatic_number_exact(g: Graph, cap: int | None = DEFAULT_CHROMATIC_CAP) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    The search starts from a maximum clique (lower bound, precoloured) and a
    DSATUR colouring (upper bound). Raises :class:`OracleScaleError` when
    ``g.n`` exceeds ``cap``; pass ``cap=None`` to lift the limit.
    """
    if cap is not None and g.n > cap:
        raise OracleScaleError(f"oracle scale: n={g.n} exceeds chromatic-number cap {cap}")
    n = g.n
    if n == 0:
        return 0
    rows = g.rows
    clique = bits_to_list(max_clique_mask(rows, g.all_mask))
    lower = len(clique)
    best = max(dsatur_colouring(g)) + 1
    if best == lower:
        return best

    classes = [1 << v for v in clique]
    uncoloured = g.all_mask
    for v in clique:
        uncoloured &= ~(1 << v)

    def search(uncoloured: int) -> bool:
        nonlocal best
        if not uncoloured:
            best = len(classes)
            return best == lower
        pick, pick_key = -1, None
        for v in iter_bits(uncoloured):
            sat = sum(1 for cls in classes if cls & rows[v])
            key = (sat, (rows[v] & uncoloured).bit_count())
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        v = pick
        rest = uncoloured & ~(1 << v)
        for c in range(len(classes)):
            if not classes[c] & rows[v]:
                classes[c] |= 1 << v
                done = search(rest)
                classes[c] &= ~(1 << v)
                if done:
                    return True
        if len(classes) + 1 < best:
            classes.append(1 << v)
            done = search(rest)
            classes.pop()
            if done:
                return True
        return False

    search(uncoloured)
    return best


# -- induced star forests ------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """Induced copy of a star forest: one ``(centre, leaves)`` pair per star,
    stars listed by descending leaf count."""

    stars: tuple[tuple[int, tuple[int, ...]], ...]

    def vertices(self) -> list[int]:
        out = []
        for centre, leaves in self.stars:
            out.append(centre)
            out.extend(leaves)
        return out

    def pattern(self) -> StarForest:
        return StarForest(len(leaves) for _, leaves in self.stars)

    def is_valid(self, g: Graph) -> bool:
        verts = self.vertices()
        if len(set(verts)) != len(verts) or any(not 0 <= v < g.n for v in verts):
            return False
        owner = {}
        for i, (centre, leaves) in enumerate(self.stars):
            owner[centre] = i
            for leaf in leaves:
                owner[leaf] = i
        centres = {centre for centre, _ in self.stars}
        for a in verts:
            for b in verts:
                if a >= b:
                    continue
                same_star = owner[a] == owner[b]
                should = same_star and (a in centres or b in centres)
                if g.has_edge(a, b) != should:
                    return False
        return True

    def to_dict(self) -> dict:
        return {"stars": [{"centre": c, "leaves": list(leaves)} for c, leaves in self.stars]}


def find_star_forest_mask(rows: Rows, mask: int, h: StarForest) -> Embedding | None:
    ks = sorted(h.stars, reverse=True)
    remaining = [0] * (len(ks) + 1)
    for i in range(len(ks) - 1, -1, -1):
        remaining[i] = remaining[i + 1] + ks[i] + 1

    def place(i: int, avail: int, prev_centre: int) -> list | None:
        if i == len(ks):
            return []
        if avail.bit_count() < remaining[i]:
            return None
        k = ks[i]
        centres = avail
        if i and ks[i - 1] == k:
            # Equal stars are interchangeable: take their centres increasing.
            centres &= ~((1 << (prev_centre + 1)) - 1)
        for c in iter_bits(centres):
            cand = rows[c] & avail
            if cand.bit_count() < k:
                continue
            for leaves in stable_subsets(rows, cand, k):
                closed = (1 << c) | rows[c]
                for leaf in leaves:
                    closed |= (1 << leaf) | rows[leaf]
                rest = place(i + 1, avail & ~closed, c)
                if rest is not None:
                    return [(c, tuple(leaves))] + rest
        return None

    found = place(0, mask, -1)
    return None if found is None else Embedding(tuple(found))


def contains_induced_star_forest(g: Graph, h: StarForest) -> Embedding | None:
    """An induced copy of ``h`` in ``g``, or ``None`` when ``g`` is ``h``-free."""
    return find_star_forest_mask(g.rows, g.all_mask, h)


def is_h_free(g: Graph, h: StarForest) -> bool:
    return contains_induced_star_forest(g, h) is None


# -- Ramsey -------------------------------------------------------------------

def ramsey_bound(omega: int, k: int) -> int:
    """``omega^(k-1) + ... + omega``: the most vertices a graph with clique
    number ``omega`` and no stable ``k``-set can have. Zero when ``k == 1``."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if omega < 0:
        raise ValueError(f"omega must be nonnegative, got {omega}")
    return sum(omega**i for i in range(1, k))


@dataclass(frozen=True)
class RamseyCertificate:
    omega: int
    k: int
    bound: int
    vertex_count: int


@dataclass(frozen=True)
class RamseyOutcome:
    """``route`` says how a stable set was found: ``"clique"`` when peeling
    a maximum clique (the inductive argument) produced it, ``"search"`` when
    the exhaustive fallback was needed."""

    stable_set: tuple[int, ...] | None = None
    certificate: RamseyCertificate | None = None
    route: str | None = None

    def is_valid(self, g: Graph, k: int) -> bool:
        if (self.stable_set is None) == (self.certificate is None):
            return False
        if self.stable_set is not None:
            s = self.stable_set
            return (
                len(set(s)) == k == len(s)
                and all(0 <= v < g.n for v in s)
                and not any(g.has_edge(a, b) for a in s for b in s if a < b)
            )
        cert = self.certificate
        return (
            cert.k == k
            and cert.vertex_count == g.n
            and cert.omega == clique_number(g)
            and cert.bound == ramsey_bound(cert.omega, k)
            and cert.vertex_count <= cert.bound
        )

    def __str__(self) -> str:
        if self.stable_set is not None:
            return "stable " + " ".join(map(str, self.stable_set))
        return f"certificate {self.certificate.vertex_count} ≤ {self.certificate.bound}"


def _ramsey_stable(rows: Rows, mask: int, k: int) -> list[int] | None:
    if k == 1:
        return [(mask & -mask).bit_length() - 1] if mask else None
    # Every vertex outside a maximum clique X misses some x in X, so the
    # sets W_x + {x} (W_x = non-neighbours of x) cover the graph.
    for x in iter_bits(max_clique_mask(rows, mask)):
        found = _ramsey_stable(rows, mask & ~rows[x] & ~(1 << x), k - 1)
        if found is not None:
            return [x] + found
    return None


def ramsey_witness(g: Graph, k: int) -> RamseyOutcome:
    """A stable ``k``-set, or a certificate that none exists and hence
    ``g.n <= ramsey_bound(omega, k)``.

    Peeling a maximum clique always succeeds when ``g.n`` exceeds the bound,
    but below it a stable set disjoint from the clique can be missed, so an
    exhaustive search runs before a certificate is issued.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    found = _ramsey_stable(g.rows, g.all_mask, k)
    if found is not None:
        return RamseyOutcome(stable_set=tuple(sorted(found)), route="clique")
    found = next(stable_subsets(g.rows, g.all_mask, k), None)
    if found is not None:
        return RamseyOutcome(stable_set=tuple(found), route="search")
    omega = clique_number(g)
    bound = ramsey_bound(omega, k)
    if g.n > bound:
        raise InvariantViolation(f"{g.n} vertices exceed Ramsey bound {bound} (omega={omega}, k={k})")
    return RamseyOutcome(certificate=RamseyCertificate(omega, k, bound, g.n))
