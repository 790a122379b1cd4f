"""Isomorph-free generation of small graphs and the uniform-graph census.

Generation is level by level: every representative on ``n - 1`` vertices is
extended by a new vertex joined to each subset of the old ones, and candidates
are deduplicated by canonical form. All lower levels are kept complete because
connectivity and minimum degree are not inherited by induced subgraphs; only
``girth_min`` is hereditary and may prune early. On the last level the new
vertex can be taken to be one of minimum degree, which cuts the candidates
without losing any isomorphism class.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Optional

from . import __version__
from .canon import canonical_form
from .graph import Graph, components, girth, parse_graph6, to_graph6
from .uniformity import UniformityReport, is_uniform, lemma2_witness, lemma3_violation

log = logging.getLogger(__name__)

MAX_N = 10


@dataclass(frozen=True)
class Constraints:
    n: Optional[int] = None
    min_degree: int = 0
    girth_exact: Optional[int] = None
    girth_min: Optional[int] = None
    connected: bool = False

    def __post_init__(self):
        if self.girth_exact is not None and self.girth_min is not None:
            raise ValueError("girth_exact and girth_min are mutually exclusive")
        if self.min_degree < 0:
            raise ValueError("min_degree must be nonnegative")

    def at(self, n: int) -> Constraints:
        return replace(self, n=n)

    def accepts(self, g: Graph) -> bool:
        if self.n is not None and g.n != self.n:
            return False
        if g.n and min(g.degrees()) < self.min_degree:
            return False
        if self.connected and len(components(g)) > 1:
            return False
        if self.girth_exact is not None or self.girth_min is not None:
            gg = girth(g)
            if self.girth_exact is not None and gg != self.girth_exact:
                return False
            if self.girth_min is not None and gg < self.girth_min:
                return False
        return True

    def describe(self) -> str:
        parts = [f"min_degree={self.min_degree}", f"connected={str(self.connected).lower()}"]
        if self.girth_exact is not None:
            parts.append(f"girth_exact={self.girth_exact}")
        if self.girth_min is not None:
            parts.append(f"girth_min={self.girth_min}")
        return " ".join(parts)


# --- extension step (runs inside worker processes) ----------------------------


def _extend_all(args) -> list[bytes]:
    """Canonical forms of all one-vertex extensions of ``parents`` (graph6 list)."""
    parent_codes, girth_min = args
    forms = set()
    for code in parent_codes:
        g = parse_graph6(code)
        n = g.n
        for mask in range(1 << n):
            child = _attach(g, mask)
            if girth_min is not None and girth(child) < girth_min:
                continue
            forms.add(canonical_form(child))
    return sorted(forms)


def _extend_final(args) -> list[bytes]:
    """Extensions for the last level, restricted by the (non-hereditary) constraints."""
    parent_codes, c = args
    forms = set()
    for code in parent_codes:
        g = parse_graph6(code)
        for child in _final_candidates(g, c):
            forms.add(canonical_form(child))
    return sorted(forms)


def _attach(g: Graph, mask: int) -> Graph:
    n = g.n
    adj = [a | ((mask >> v & 1) << n) for v, a in enumerate(g.adj)]
    adj.append(mask)
    return _fast_graph(n + 1, adj)


def _fast_graph(n: int, adj: list[int]) -> Graph:
    # adjacency built by _attach is symmetric and loop-free by construction
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def _final_candidates(g: Graph, c: Constraints) -> Iterable[Graph]:
    n = g.n
    deg = g.degrees()
    need = c.min_degree
    if any(d < need - 1 for d in deg):
        return
    forced = sum(1 << v for v in range(n) if deg[v] < need)
    comp_masks = [sum(1 << v for v in comp) for comp in components(g)] if c.connected else []
    free = [v for v in range(n) if not forced >> v & 1]
    nforced = forced.bit_count()
    low = max(need, 1 if c.connected and n else 0)
    for size in range(max(low - nforced, 0), len(free) + 1):
        k = nforced + size
        # the new vertex must have minimum degree in the child
        if any(deg[v] + 1 < k for v in range(n)):
            break
        for extra in combinations(free, size):
            mask = forced
            for v in extra:
                mask |= 1 << v
            if any(deg[v] < k and not mask >> v & 1 for v in range(n)):
                continue
            if any(not mask & cm for cm in comp_masks):
                continue
            child = _attach(g, mask)
            if c.girth_min is not None and girth(child) < c.girth_min:
                continue
            yield child


# --- level driver -------------------------------------------------------------


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // max(parts, 1)))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _map(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _merge(results: list[list[bytes]]) -> list[bytes]:
    merged = set()
    for part in results:
        merged.update(part)
    return sorted(merged)


class Generator:
    """Complete isomorph-free levels, built on demand and cached per instance."""

    def __init__(self, girth_min: Optional[int] = None, jobs: int = 1):
        self.girth_min = girth_min
        self.jobs = jobs
        self.levels: list[list[bytes]] = [[b"?"]]  # n = 0: the empty graph

    def level(self, n: int) -> list[bytes]:
        while len(self.levels) <= n:
            k = len(self.levels)
            parents = [p.decode() for p in self.levels[k - 1]]
            tasks = [(chunk, self.girth_min) for chunk in _chunks(parents, 4 * self.jobs)]
            self.levels.append(_merge(_map(_extend_all, tasks, self.jobs)))
            log.info("level %d: %d graphs", k, len(self.levels[k]))
        return self.levels[n]

    def constrained(self, c: Constraints, final: bool = True) -> list[Graph]:
        """Representatives on ``c.n`` vertices meeting ``c``, sorted by canonical form.

        With ``final`` the last level is produced by the restricted extension
        instead of materialising the complete level.
        """
        n = c.n
        if n is None:
            raise ValueError("constraints need a vertex count")
        if n == 0 or not final or len(self.levels) > n:
            forms = self.level(n)
        else:
            parents = [p.decode() for p in self.level(n - 1)]
            tasks = [(chunk, c) for chunk in _chunks(parents, 4 * self.jobs)]
            forms = _merge(_map(_extend_final, tasks, self.jobs))
        out = []
        for form in forms:
            g = parse_graph6(form.decode())
            if c.accepts(g):
                out.append(g)
        return out


def enumerate_graphs(c: Constraints, jobs: int = 1) -> list[Graph]:
    """One canonically labelled representative per isomorphism class meeting ``c``."""
    if c.n is None or not 0 <= c.n <= MAX_N:
        raise ValueError(f"vertex count must be in 0..{MAX_N}")
    hereditary = c.girth_min
    return Generator(girth_min=hereditary, jobs=jobs).constrained(c)


# --- census -------------------------------------------------------------------


def _census_check(args) -> list[tuple[str, Optional[UniformityReport]]]:
    codes, prune = args
    out = []
    for code in codes:
        g = parse_graph6(code)
        if prune and (lemma2_witness(g) or lemma3_violation(g)):
            out.append((code, None))
            continue
        report = is_uniform(g)
        out.append((code, is_uniform(g, full=True) if report.uniform else None))
    return out


def census_uniform(
    n_max: int,
    c: Constraints = Constraints(),
    jobs: int = 1,
    prune_lemmas: bool = False,
    n_min: int = 1,
) -> list[tuple[Graph, UniformityReport]]:
    """All classes with ``n_min <= n <= n_max`` meeting ``c`` whose star-factors all weigh the same.

    Output is ordered by vertex count, then canonical form, independent of ``jobs``.
    Graphs without any star-factor are excluded (they are vacuously uniform but
    not members of interest).
    """
    if n_max > MAX_N:
        raise ValueError(f"census is limited to n <= {MAX_N}")
    gen = Generator(girth_min=c.girth_min, jobs=jobs)
    results = []
    for n in range(max(n_min, 1), n_max + 1):
        reps = gen.constrained(c.at(n), final=(n == n_max))
        codes = [to_graph6(g) for g in reps]
        tasks = [(chunk, prune_lemmas) for chunk in _chunks(codes, 4 * jobs)]
        checked = [item for part in _map(_census_check, tasks, jobs) for item in part]
        kept = [(parse_graph6(code), rep) for code, rep in checked if rep is not None and rep.factor_exists]
        log.info("n=%d: %d candidates, %d uniform", n, len(reps), len(kept))
        results.extend(kept)
    return results


def default_jobs() -> int:
    env = os.environ.get("STARFACTOR_JOBS")
    return int(env) if env else 1


def format_census(
    graphs: Iterable[Graph], n_max: int, c: Constraints, extra_header: Iterable[str] = ()
) -> str:
    """Census file: '#' header lines followed by one graph6 string per line."""
    graphs = list(graphs)
    lines = [
        f"# starfactor census, version {__version__}",
        f"# constraints: n_max={n_max} {c.describe()}",
        f"# count: {len(graphs)}",
    ]
    lines += [f"# {h}" for h in extra_header]
    lines += [to_graph6(g) for g in graphs]
    return "\n".join(lines) + "\n"


def read_graph6_lines(text: str, strict: bool = False) -> list[Graph]:
    """Parse a graph6 list, skipping blank lines and '#' comments."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(parse_graph6(line, strict=strict))
    return out
