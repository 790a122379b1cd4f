"""Membership in the family U: do all star-factors of a graph weigh the same?

Weights are exact (``int`` or ``Fraction``); nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .factors import StarFactor, iter_parent_maps
from .graph import Edge, Graph, iter_bits, leaves_and_stems, normalize_edge, triangles

Number = Union[int, Fraction]


class WeightingError(ValueError):
    pass


class Weighting(Mapping[Edge, Number]):
    """A strictly positive exact weight on every edge of a host graph."""

    def __init__(self, g: Graph, values: Mapping[Edge, Number] | Sequence[Number]):
        edges = g.edges()
        if isinstance(values, Mapping):
            table = {normalize_edge(*e): _exact(w) for e, w in values.items()}
        else:
            if len(values) != len(edges):
                raise WeightingError(f"expected {len(edges)} weights, got {len(values)}")
            table = {e: _exact(w) for e, w in zip(edges, values)}
        missing = [e for e in edges if e not in table]
        if missing:
            raise WeightingError(f"weighting misses edges {missing}")
        extra = set(table) - set(edges)
        if extra:
            raise WeightingError(f"weighting has non-edges {sorted(extra)}")
        bad = [e for e in edges if table[e] <= 0]
        if bad:
            raise WeightingError(f"weights must be positive; offending edges {bad}")
        self.graph = g
        self._table = table

    @classmethod
    def constant(cls, g: Graph, value: Number = 1) -> Weighting:
        return cls(g, [value] * g.m)

    def scaled(self, c: Number) -> Weighting:
        return Weighting(self.graph, {e: w * c for e, w in self._table.items()})

    def as_list(self) -> list[Number]:
        return [self._table[e] for e in self.graph.edges()]

    def __getitem__(self, e: Edge) -> Number:
        return self._table[normalize_edge(*e)]

    def __iter__(self):
        return iter(self._table)

    def __len__(self) -> int:
        return len(self._table)


def _exact(w) -> Number:
    if isinstance(w, float):
        raise WeightingError("float weights are not accepted; use int or Fraction")
    return Fraction(w) if not isinstance(w, int) else w


@dataclass
class UniformityReport:
    factor_exists: bool
    uniform: bool
    spectrum: list[Number]
    factor_count: Optional[int] = None
    witness: Optional[tuple[StarFactor, StarFactor]] = None
    complete: bool = field(default=True)

    def to_json(self) -> dict:
        out = {
            "factor_exists": self.factor_exists,
            "uniform": self.uniform,
            "spectrum": [_jsonable(x) for x in self.spectrum],
            "factor_count": self.factor_count,
        }
        if self.witness is not None:
            out["witness"] = [f.to_json() for f in self.witness]
        return out


def _jsonable(x: Number):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def weight_of(factor: StarFactor, w: Mapping[Edge, Number]) -> Number:
    try:
        return sum((w[e] for e in factor.edges), 0)
    except KeyError as exc:
        raise WeightingError(f"weighting has no value for edge {exc.args[0]}") from None


def _scan(g: Graph, weigh, full: bool) -> UniformityReport:
    first_by_weight: dict = {}
    count = 0
    witness = None
    if not full:
        # cheap probe: first factor of each search order; they often differ
        a = next(iter_parent_maps(g), None)
        if a is not None:
            a = tuple(a)
            b = tuple(next(iter_parent_maps(g, leaf_first=True)))
            if weigh(a) != weigh(b):
                return UniformityReport(
                    factor_exists=True,
                    uniform=False,
                    spectrum=sorted({weigh(a), weigh(b)}),
                    witness=(StarFactor(a), StarFactor(b)),
                    complete=False,
                )
    for p in iter_parent_maps(g):
        count += 1
        value = weigh(p)
        if value not in first_by_weight:
            first_by_weight[value] = tuple(p)
            if witness is None and len(first_by_weight) == 2:
                a, b = first_by_weight.values()
                witness = (StarFactor(a), StarFactor(b))
                if not full:
                    break
    spectrum = sorted(first_by_weight)
    truncated = witness is not None and not full
    return UniformityReport(
        factor_exists=count > 0,
        uniform=witness is None,
        spectrum=spectrum,
        factor_count=None if truncated else count,
        witness=witness,
        complete=not truncated,
    )


def is_uniform(g: Graph, full: bool = False) -> UniformityReport:
    """Report under the all-ones weighting, stopping at the second distinct weight.

    With ``full=True`` enumeration runs to the end so that ``spectrum`` and
    ``factor_count`` are complete. A graph with no star-factor is reported as
    vacuously uniform with ``factor_exists=False``.
    """
    # weight of a factor under all-ones = n - number of centres
    return _scan(g, lambda p: sum(1 for v, c in enumerate(p) if c != v), full)


def weight_spectrum(g: Graph, w: Mapping[Edge, Number]) -> list[Number]:
    return _scan(g, _parent_weigher(g, w), full=True).spectrum


def is_uniform_weighted(
    g: Graph, w: Mapping[Edge, Number]
) -> tuple[bool, Optional[tuple[StarFactor, StarFactor]]]:
    if not isinstance(w, Weighting):
        w = Weighting(g, w)
    elif w.graph != g:
        raise WeightingError("weighting belongs to a different graph")
    report = _scan(g, _parent_weigher(g, w), full=False)
    return report.uniform, report.witness


def _parent_weigher(g: Graph, w: Mapping[Edge, Number]):
    for e in g.edges():
        if e not in w:
            raise WeightingError(f"weighting has no value for edge {e}")
    table = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        table[u][v] = table[v][u] = w[(u, v)]

    def weigh(p):
        return sum((table[v][c] for v, c in enumerate(p) if c != v), 0)

    return weigh


# --- structural non-membership detectors -------------------------------------


@dataclass(frozen=True)
class Lemma2Witness:
    triangle: tuple[int, int, int]  # (stem, degree-2, degree-2)
    stem: int
    leaf: int


@dataclass(frozen=True)
class Lemma3Witness:
    triangle: tuple[int, int, int]  # (high-degree vertex, degree-2, degree-2)
    vertex: int
    non_stem: int


def _lonely_triangles(g: Graph) -> Iterable[tuple[int, int, int]]:
    """Triangles (a, b, c) where b and c have degree 2 and a has degree >= 3.

    Nothing is reported for graphs with isolated vertices: they have no
    star-factor at all, so they are uniform only vacuously.
    """
    deg = g.degrees()
    if 0 in deg:
        return
    for tri in triangles(g):
        low = [v for v in tri if deg[v] == 2]
        if len(low) == 2:
            (a,) = [v for v in tri if deg[v] != 2]
            yield (a, low[0], low[1])


def lemma2_witness(g: Graph) -> Optional[Lemma2Witness]:
    """A triangle with two degree-2 vertices whose third vertex is a stem.

    Its presence rules out membership in U: the stem can take both triangle
    vertices as extra leaves, or they can form their own K_{1,1}.
    """
    leaves, _ = leaves_and_stems(g)
    for a, b, c in _lonely_triangles(g):
        for u in iter_bits(g.adj[a]):
            if u in leaves:
                return Lemma2Witness((a, b, c), a, u)
    return None


def lemma3_violation(g: Graph) -> Optional[Lemma3Witness]:
    """A triangle with exactly one vertex of degree >= 3 adjacent to a non-stem off the triangle."""
    _, stems = leaves_and_stems(g)
    for a, b, c in _lonely_triangles(g):
        for x in iter_bits(g.adj[a]):
            if x not in (b, c) and x not in stems:
                return Lemma3Witness((a, b, c), a, x)
    return None
