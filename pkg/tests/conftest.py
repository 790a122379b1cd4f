import itertools

import pytest
from hypothesis import strategies as st

from starfactor.factors import is_star_factor
from starfactor.graph import Graph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number, name, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {number}. {name} {detail}".rstrip())

    return record


# --- independent oracles ------------------------------------------------------


def brute_force_factors(g: Graph) -> set:
    """Every edge subset that is a star-factor (exponential in |E|)."""
    edges = g.edges()
    found = set()
    for mask in range(1 << len(edges)):
        chosen = [edges[k] for k in range(len(edges)) if mask >> k & 1]
        if is_star_factor(g, chosen):
            found.add(frozenset(chosen))
    return found


def labelled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def orbit_key(g: Graph) -> tuple:
    """Minimum sorted edge list over all relabellings: an isomorphism invariant by brute force."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return best


def to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=0, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs_without_isolated(draw, min_n=2, max_n=7):
    g = draw(graphs(min_n, max_n))
    edges = g.edges()
    # patch isolated vertices by joining each to its successor (or predecessor)
    for v in range(g.n):
        if g.adj[v] == 0:
            u = v + 1 if v + 1 < g.n else v - 1
            edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(g.n, set(edges))
