"""Exact solver for the star-weighting question.

Is there a positive weight per edge making every star-factor weigh the same?
Equal weights for all factors is the linear system (chi(S_i) - chi(S_1)) . w = 0
over the incidence vectors chi of the factors. Writing w = K t for a kernel
basis K, the question becomes whether K t >= 1 is feasible (any positive
solution can be rescaled to one with all entries >= 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .factors import iter_parent_maps
from .graph import Graph, isolated_vertices
from .linalg import Echelon, fourier_motzkin, integer_scaling
from .uniformity import Weighting, is_uniform_weighted

DEFAULT_FACTOR_CAP = 100_000

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
NO_FACTOR = "no_factor"
TRUNCATED = "truncated_infeasible_only"


class NoStarFactorError(ValueError):
    pass


@dataclass
class WeightingSolution:
    status: str
    weights: Optional[list[int]]
    kernel_dimension: int
    factor_count: int
    truncated: bool = False
    edges: list = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "weights": self.weights,
            "kernel_dimension": self.kernel_dimension,
            "factor_count": self.factor_count,
            "edges": [f"{u}-{v}" for u, v in self.edges],
        }


def _incidence_rows(g: Graph, cap: Optional[int] = None):
    """Incidence vectors of star-factors over ``g.edges()``; stops after ``cap``."""
    index = {e: i for i, e in enumerate(g.edges())}
    m = len(index)
    for count, p in enumerate(iter_parent_maps(g), 1):
        if cap is not None and count > cap:
            return
        row = [0] * m
        for v, c in enumerate(p):
            if c != v:
                row[index[(v, c) if v < c else (c, v)]] = 1
        yield row


def difference_system(g: Graph) -> list[list[int]]:
    """Rows chi(S_i) - chi(S_1) for i >= 2, columns in lexicographic edge order."""
    rows = _incidence_rows(g)
    first = next(rows, None)
    if first is None:
        raise NoStarFactorError("graph has no star-factor")
    return [[a - b for a, b in zip(row, first)] for row in rows]


def solve_uniform_weighting(
    g: Graph, factor_cap: int = DEFAULT_FACTOR_CAP, max_inequalities: int = 50_000
) -> WeightingSolution:
    """Find positive integer edge weights equalising all star-factors, or prove none exist.

    Beyond ``factor_cap`` factors the system is partial: it can still prove
    infeasibility, but a solution of it proves nothing and is withheld.
    Raises :class:`EliminationLimitError` if elimination exceeds ``max_inequalities``.
    """
    edges = g.edges()
    m = len(edges)
    if isolated_vertices(g):
        return WeightingSolution(NO_FACTOR, None, m, 0, edges=edges)

    echelon = Echelon(m)
    first = None
    count = 0
    truncated = False
    for row in _incidence_rows(g, factor_cap + 1):
        count += 1
        if count > factor_cap:
            truncated = True
            count -= 1
            break
        if first is None:
            first = row
            continue
        if echelon.rank < m:
            echelon.add([a - b for a, b in zip(row, first)])
    kernel = echelon.kernel()
    dim = len(kernel)

    if count <= 1 or all(sum(r) == 0 for r in echelon.rows.values()):
        # every factor has the same size, so constant weights work
        return _finish(g, [1] * m, dim, count, truncated, edges)

    if dim == 0:
        return WeightingSolution(INFEASIBLE, None, 0, count, truncated, edges)
    # K t >= 1, one inequality per edge
    system = [(tuple(vec[e] for vec in kernel), Fraction(1)) for e in range(m)]
    t = fourier_motzkin(system, max_rows=max_inequalities)
    if t is None:
        return WeightingSolution(INFEASIBLE, None, dim, count, truncated, edges)
    w = [sum((vec[e] * t[j] for j, vec in enumerate(kernel)), Fraction(0)) for e in range(m)]
    return _finish(g, integer_scaling(w), dim, count, truncated, edges)


def _finish(g, weights, dim, count, truncated, edges) -> WeightingSolution:
    if truncated:
        return WeightingSolution(TRUNCATED, None, dim, count, True, edges)
    return WeightingSolution(FEASIBLE, weights, dim, count, False, edges)


def verify_solution(g: Graph, solution: WeightingSolution) -> bool:
    """Re-check a feasible answer by streaming every factor under the returned weights."""
    if not solution.feasible:
        return False
    ok, _ = is_uniform_weighted(g, Weighting(g, solution.weights))
    return ok
