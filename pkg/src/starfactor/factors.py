"""Star-factors: validation and exhaustive enumeration.

A star-factor is encoded by a parent map ``p``: ``p[v] == v`` for centres and
``p[v] == c`` for a leaf attached to centre ``c``. For a two-vertex star the
smaller endpoint is the centre, which makes the map a bijection onto edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Edge, EdgeSet, Graph, components, edge_set, isolated_vertices, iter_bits


@dataclass(frozen=True)
class StarFactor:
    parent: tuple[int, ...]

    @property
    def edges(self) -> EdgeSet:
        return frozenset((min(v, c), max(v, c)) for v, c in enumerate(self.parent) if c != v)

    @property
    def centers(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.parent) if c == v)

    @property
    def size(self) -> int:
        """Number of edges, which is also its weight when every edge weighs 1."""
        return sum(1 for v, c in enumerate(self.parent) if c != v)

    def stars(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {c: [] for c in self.centers}
        for v, c in enumerate(self.parent):
            if c != v:
                out[c].append(v)
        return out

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {
            "edges": [f"{u}-{v}" for u, v in self.sorted_edges()],
            "centers": list(self.centers),
        }

    @classmethod
    def from_edges(cls, g: Graph, edges: Iterable[Iterable[int]]) -> StarFactor:
        es = edge_set(edges)
        if not is_star_factor(g, es):
            raise ValueError("edge set is not a star-factor of the graph")
        deg = [0] * g.n
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        parent = list(range(g.n))
        for u, v in es:
            # centre is the endpoint of larger factor degree, the smaller label on ties
            if deg[u] > deg[v] or (deg[u] == deg[v] and u < v):
                parent[v] = u
            else:
                parent[u] = v
        return cls(tuple(parent))


def is_star_factor(g: Graph, edges: Iterable[Iterable[int]]) -> bool:
    """True iff ``edges`` span ``g`` and every component is a star with >= 2 vertices."""
    es = edge_set(edges)
    if any(not g.has_edge(u, v) for u, v in es):
        return False
    h = Graph.from_edges(g.n, es)
    if isolated_vertices(h):
        return False
    for comp in components(h):
        k = len(comp)
        m = sum(h.degree(v) for v in comp) // 2
        if m != k - 1:
            return False
        if k > 2 and max(h.degree(v) for v in comp) != k - 1:
            return False
    return True


def iter_parent_maps(
    g: Graph, max_leaves: int | None = None, leaf_first: bool = False
) -> Iterator[list[int]]:
    """Lazily yield the parent map of every star-factor (the same list object, mutated).

    Vertices are decided in index order. A vertex is either a centre or attaches
    to a neighbour; attaching to a later neighbour forces that neighbour to
    become a centre when its turn comes. Callers must copy what they keep.

    ``leaf_first`` tries the leaf options before the centre option, so the
    first factors produced tend to have few, large stars.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        yield []
        return
    if any(mask == 0 for mask in adj):
        return
    cap = n if max_leaves is None else max_leaves
    if cap < 1:
        return
    parent = [-1] * n
    count = [0] * n
    first_leaf = [-1] * n
    state = {"forced": 0, "centers": 0}

    def viable(v: int) -> bool:
        # every decided centre must still be able to end up with a legal star
        later = ~((1 << (v + 1)) - 1) & ~state["forced"]
        for c in iter_bits(state["centers"] & ((1 << (v + 1)) - 1)):
            k = count[c]
            if k == 0 or (k == 1 and first_leaf[c] < c):
                if not adj[c] & later:
                    return False
        return True

    def rec(v: int) -> Iterator[list[int]]:
        if v == n:
            yield parent
            return
        bit = 1 << v
        if state["forced"] & bit:
            parent[v] = v
            state["centers"] |= bit
            if viable(v):
                yield from rec(v + 1)
            state["centers"] &= ~bit
            parent[v] = -1
            return
        if not leaf_first:
            yield from as_centre(v)
        # v as a leaf of an earlier centre
        for c in iter_bits(adj[v] & state["centers"]):
            if count[c] >= cap:
                continue
            parent[v] = c
            count[c] += 1
            if count[c] == 1:
                first_leaf[c] = v
            if viable(v):
                yield from rec(v + 1)
            if count[c] == 1:
                first_leaf[c] = -1
            count[c] -= 1
        # v as a leaf of a later neighbour, which becomes a centre
        for c in iter_bits(adj[v] >> (v + 1) << (v + 1)):
            if count[c] >= cap:
                continue
            newly = not state["forced"] >> c & 1
            parent[v] = c
            count[c] += 1
            if count[c] == 1:
                first_leaf[c] = v
            state["forced"] |= 1 << c
            if viable(v):
                yield from rec(v + 1)
            if newly:
                state["forced"] &= ~(1 << c)
            if count[c] == 1:
                first_leaf[c] = -1
            count[c] -= 1
        if leaf_first:
            yield from as_centre(v)
        parent[v] = -1

    def as_centre(v: int) -> Iterator[list[int]]:
        bit = 1 << v
        parent[v] = v
        state["centers"] |= bit
        if viable(v):
            yield from rec(v + 1)
        state["centers"] &= ~bit

    yield from rec(0)


def iter_star_factors(g: Graph, max_leaves: int | None = None) -> Iterator[StarFactor]:
    """Lazy stream of star-factors, optionally limited to stars K_{1,t} with t <= max_leaves."""
    for p in iter_parent_maps(g, max_leaves):
        yield StarFactor(tuple(p))


def enumerate_star_factors(g: Graph, max_leaves: int | None = None) -> list[StarFactor]:
    """All star-factors, sorted lexicographically by their sorted edge lists."""
    return sorted(iter_star_factors(g, max_leaves), key=StarFactor.sorted_edges)


def has_star_factor(g: Graph) -> bool:
    # n = 0 has the empty factor; otherwise any graph without isolated vertices works
    return not isolated_vertices(g)


def has_bounded_star_factor(g: Graph, max_leaves: int) -> bool:
    """Does ``g`` have a {K_{1,1}, ..., K_{1,max_leaves}}-factor? Decided by search."""
    return next(iter_parent_maps(g, max_leaves), None) is not None
