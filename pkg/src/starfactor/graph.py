"""Simple undirected graphs on vertices 0..n-1 stored as adjacency bitmasks.

Every function here is pure; :class:`Graph` values are immutable and hashable,
so they can be shared freely between worker processes.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

INFINITE = math.inf

Edge = tuple[int, int]
EdgeSet = frozenset  # of Edge, each normalised to (u, v) with u < v


class GraphFormatError(ValueError):
    """Raised when a textual graph encoding cannot be decoded."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_set(edges: Iterable[Iterable[int]]) -> EdgeSet:
    return frozenset(normalize_edge(*e) for e in edges)


@dataclass(frozen=True)
class Graph:
    """A simple graph. ``adj[v]`` is the bitmask of neighbours of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Image of the graph under ``v -> perm[v]``."""
        adj = [0] * self.n
        for v, mask in enumerate(self.adj):
            image = 0
            for u in iter_bits(mask):
                image |= 1 << perm[u]
            adj[perm[v]] = image
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in increasing vertex order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- constructors used throughout the tests and scripts ---------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def house_graph() -> Graph:
    """Triangle 0-1-2 sharing the edge 0-1 with the quadrangle 0-1-3-4."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (4, 0)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def triangle_with_quadrangles(k: int) -> Graph:
    """Triangle v1 v2 v3 (vertices 0, 1, 2) with ``k - 2`` quadrangles on v1 v2.

    Quadrangle ``i`` adds ``y_i`` adjacent to v1 and ``x_i`` adjacent to v2, with
    ``x_i y_i`` an edge. v1 and v2 end up with degree ``k``, v3 and every other
    vertex with degree 2. ``k = 3`` is the house graph.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    edges = [(0, 1), (1, 2), (0, 2)]
    n = 3
    for _ in range(k - 2):
        y, x = n, n + 1
        edges += [(0, y), (y, x), (x, 1)]
        n += 2
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


# --- graph6 ------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output is limited to n <= 62")
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = group << 1 | b
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str, strict: bool = False) -> Graph:
    """Decode one graph6 string (optionally with the ``>>graph6<<`` header).

    With ``strict=True`` nonzero padding bits are rejected; otherwise ignored.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphFormatError("graph6 byte outside 63..126")
    n = data[0]
    if n == 63:
        raise GraphFormatError("multi-byte graph6 size header (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != nbytes:
        kind = "truncated" if len(payload) < nbytes else "overlong"
        raise GraphFormatError(f"{kind} graph6 payload: expected {nbytes} bytes, got {len(payload)}")
    if strict and nbytes and payload[-1] & ((1 << (6 * nbytes - nbits)) - 1):
        raise GraphFormatError("nonzero graph6 padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# --- edge lists -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; an optional first line ``n <count>`` fixes the order.

    Blank lines and ``#`` comments are skipped; duplicate edges collapse.
    """
    declared = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n" and declared is None and not pairs:
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'n <count>'")
            declared = _nonneg_int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex labels, got {line!r}")
        u, v = (_nonneg_int(t, lineno) for t in tokens)
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        pairs.append((u, v))
    top = max((max(p) for p in pairs), default=-1) + 1
    if declared is not None and declared < top:
        raise GraphFormatError(f"declared n={declared} but label {top - 1} appears")
    return Graph.from_edges(declared if declared is not None else top, set(map(lambda p: normalize_edge(*p), pairs)))


def _nonneg_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: {token!r} is not an integer") from None
    if value < 0:
        raise GraphFormatError(f"line {lineno}: negative vertex label {value}")
    return value


def to_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# --- structural queries -------------------------------------------------------


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    BFS from every root; a non-tree edge ``(u, w)`` closes a closed walk of
    length ``dist[u] + dist[w] + 1`` through the root, and the minimum over all
    roots of these values is exactly the girth.
    """
    best = INFINITE
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("maximum degree of the empty graph is undefined")
    return max(g.degrees())


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    result = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        result.append(list(iter_bits(comp)))
    return result


def is_connected(g: Graph) -> bool:
    # the empty graph counts as connected
    return len(components(g)) <= 1


def leaves_and_stems(g: Graph) -> tuple[set[int], set[int]]:
    leaves = {v for v in range(g.n) if g.degree(v) == 1}
    stems = {v for v in range(g.n) if any(u in leaves for u in iter_bits(g.adj[v]))}
    return leaves, stems


def isolated_vertices(g: Graph) -> set[int]:
    return {v for v in range(g.n) if g.adj[v] == 0}


def delete_edges(g: Graph, f: Iterable[Iterable[int]]) -> tuple[Graph, set[int]]:
    """Return ``G - F`` on the same vertex set and the vertices it leaves isolated."""
    adj = list(g.adj)
    for u, v in edge_set(f):
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    h = Graph(g.n, tuple(adj))
    return h, isolated_vertices(h)


def triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for a in range(g.n):
        higher = g.adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            for c in iter_bits(g.adj[b] & higher & ~((1 << (b + 1)) - 1)):
                yield a, b, c
