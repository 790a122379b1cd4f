"""Canonical labelling for small graphs.

Individualisation-refinement: refine the vertex partition to an equitable one,
branch on a cell, and keep the leaf whose relabelled adjacency rows are
lexicographically smallest. Automorphisms found when two leaves coincide are
used to skip equivalent branches. Intended for n <= 16; it stays correct
beyond that but may get slow on large, highly symmetric graphs.
"""

from __future__ import annotations

from .graph import Graph, iter_bits, to_graph6

CanonicalForm = bytes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; split cells are ordered by neighbour count."""
    while True:
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            split = False
            new = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(cell)
                else:
                    split = True
                    new.extend(groups[k] for k in sorted(groups))
            if split:
                cells = new
                break
        else:
            return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first_path: list[int] | None = None
        self.first_code = None
        self.first_order = None
        self.best_path: list[int] | None = None
        self.best_code = None
        self.best_order: list[int] | None = None
        self.generators: list[list[int]] = []

    def run(self) -> list[int]:
        self._visit([list(range(self.n))] if self.n else [], [])
        return self.best_order or []

    def _orbit_root(self, parent: list[int], v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def _orbits_fixing(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))
        for gamma in self.generators:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = self._orbit_root(parent, v), self._orbit_root(parent, gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return parent

    def _automorphism(self, order_a: list[int], order_b: list[int]) -> list[int]:
        gamma = [0] * self.n
        for a, b in zip(order_a, order_b):
            gamma[a] = b
        return gamma

    @staticmethod
    def _common_prefix(p: list[int], q: list[int]) -> int:
        k = 0
        while k < len(p) and k < len(q) and p[k] == q[k]:
            k += 1
        return k

    def _visit(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore one node. Returns the depth to unwind to, or None."""
        cells = _refine(self.adj, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            return self._leaf([c[0] for c in cells], path)

        depth = len(path)
        tried: list[int] = []
        for v in cells[target]:
            if tried:
                parent = self._orbits_fixing(path)
                root = self._orbit_root(parent, v)
                if any(self._orbit_root(parent, t) == root for t in tried):
                    continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = self._visit(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, order: list[int], path: list[int]) -> int | None:
        code = _leaf_code(self.adj, order)
        if self.first_code is None:
            self.first_code, self.first_order, self.first_path = code, order, path
            self.best_code, self.best_order, self.best_path = code, order, path
            return None
        for ref_code, ref_order, ref_path in (
            (self.first_code, self.first_order, self.first_path),
            (self.best_code, self.best_order, self.best_path),
        ):
            if code == ref_code:
                gamma = self._automorphism(ref_order, order)
                self.generators.append(gamma)
                # backjump only when gamma carries the reference path onto this one
                if len(ref_path) == len(path) and all(gamma[a] == b for a, b in zip(ref_path, path)):
                    return self._common_prefix(ref_path, path)
                return None
        if code < self.best_code:
            self.best_code, self.best_order, self.best_path = code, order, path
        return None


def canonical_labeling(g: Graph) -> list[int]:
    """``perm`` with ``g.relabel(perm)`` equal for all graphs isomorphic to ``g``."""
    order = _Search(g).run()
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant key: the graph6 bytes of the canonical relabelling."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> list[list[int]]:
    """Automorphisms discovered while canonicalising (not necessarily a full generating set)."""
    s = _Search(g)
    s.run()
    return s.generators
