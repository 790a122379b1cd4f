import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.optimize import linprog

from conftest import graphs_without_isolated
from starfactor.graph import Graph, complete_graph, cycle_graph, house_graph, path_graph, star_graph
from starfactor.linalg import rank
from starfactor.search import Constraints, enumerate_graphs
from starfactor.uniformity import Weighting, is_uniform, is_uniform_weighted
from starfactor.weighting import (
    FEASIBLE,
    INFEASIBLE,
    NO_FACTOR,
    TRUNCATED,
    NoStarFactorError,
    difference_system,
    solve_uniform_weighting,
    verify_solution,
)


class TestDifferenceSystem:
    def test_c4(self):
        (row,) = difference_system(cycle_graph(4))
        assert set(row) <= {-1, 0, 1} and any(row)

    def test_c5(self):
        rows = difference_system(cycle_graph(5))
        assert len(rows) == 4
        assert rank(rows, 5) == 4

    def test_no_factor(self):
        with pytest.raises(NoStarFactorError):
            difference_system(Graph.from_edges(3, [(0, 1)]))


class TestSolver:
    def test_c6_infeasible(self):
        sol = solve_uniform_weighting(cycle_graph(6))
        assert sol.status == INFEASIBLE and sol.weights is None
        assert sol.factor_count == 5 and sol.kernel_dimension == 2

    def test_c5_constant(self):
        sol = solve_uniform_weighting(cycle_graph(5))
        assert sol.status == FEASIBLE and sol.weights == [1] * 5

    def test_p3(self):
        sol = solve_uniform_weighting(path_graph(3))
        assert sol.feasible and sol.kernel_dimension == 2 and sol.factor_count == 1

    def test_c9_needs_non_constant_or_fails(self):
        sol = solve_uniform_weighting(cycle_graph(9))
        assert not is_uniform(cycle_graph(9)).uniform
        if sol.feasible:
            assert len(set(sol.weights)) > 1 and verify_solution(cycle_graph(9), sol)

    def test_no_factor(self):
        sol = solve_uniform_weighting(Graph.from_edges(3, [(0, 1)]))
        assert sol.status == NO_FACTOR and not sol.feasible

    def test_truncation(self):
        g = complete_graph(6)
        sol = solve_uniform_weighting(g, factor_cap=3)
        assert sol.truncated and sol.factor_count == 3
        assert sol.status in (TRUNCATED, INFEASIBLE)
        assert sol.weights is None

    def test_json(self):
        data = solve_uniform_weighting(cycle_graph(4)).to_json()
        assert data["status"] == FEASIBLE and data["edges"][0] == "0-1"


def brute_force_weighting(g, top=4):
    """Search weights in 1..top for every edge."""
    for values in itertools.product(range(1, top + 1), repeat=g.m):
        if is_uniform_weighted(g, Weighting(g, list(values)))[0]:
            return list(values)
    return None


def lp_feasible(g):
    rows = difference_system(g)
    if not rows:
        return True
    res = linprog(
        np.zeros(g.m),
        A_eq=np.array(rows, dtype=float),
        b_eq=np.zeros(len(rows)),
        bounds=[(1, None)] * g.m,
        method="highs",
    )
    return res.status == 0


@settings(max_examples=80, deadline=None)
@given(graphs_without_isolated(max_n=6))
def test_solutions_verify(g):
    sol = solve_uniform_weighting(g)
    if sol.feasible:
        assert all(isinstance(x, int) and x > 0 for x in sol.weights)
        assert verify_solution(g, sol)
    if is_uniform(g).uniform:
        assert sol.feasible


@settings(max_examples=40, deadline=None)
@given(graphs_without_isolated(max_n=6))
def test_matches_small_weight_brute_force(g):
    if g.m > 7:
        return
    sol = solve_uniform_weighting(g)
    found = brute_force_weighting(g)
    if found is not None:
        assert sol.feasible
    if not sol.feasible:
        assert found is None


@pytest.mark.parametrize("n", range(2, 7))
def test_matches_lp_on_connected_graphs(n):
    for g in enumerate_graphs(Constraints(n=n, min_degree=1, connected=True)):
        sol = solve_uniform_weighting(g)
        assert sol.feasible == lp_feasible(g), g


def test_scaling_a_solution():
    g = house_graph()
    sol = solve_uniform_weighting(g)
    doubled = Weighting(g, sol.weights).scaled(2)
    assert is_uniform_weighted(g, doubled)[0]


def test_star_has_a_single_factor():
    sol = solve_uniform_weighting(star_graph(5))
    assert sol.feasible and sol.factor_count == 1
