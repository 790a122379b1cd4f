import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import brute_force_factors, graphs, graphs_without_isolated
from starfactor.factors import enumerate_star_factors, iter_star_factors
from starfactor.graph import (
    Graph,
    cycle_graph,
    delete_edges,
    house_graph,
    path_graph,
    star_graph,
    triangle_with_quadrangles,
)
from starfactor.uniformity import (
    Weighting,
    WeightingError,
    is_uniform,
    is_uniform_weighted,
    lemma2_witness,
    lemma3_violation,
    weight_of,
    weight_spectrum,
)


def brute_spectrum(g, w=None):
    return sorted({sum(w[e] if w else 1 for e in es) for es in brute_force_factors(g)})


def test_weight_of():
    # three labelled factors, all the same path on three vertices up to isomorphism
    factors = enumerate_star_factors(cycle_graph(3))
    assert len(factors) == 3
    assert {weight_of(f, Weighting.constant(cycle_graph(3))) for f in factors} == {2}
    f = enumerate_star_factors(cycle_graph(5))[0]
    assert weight_of(f, Weighting.constant(cycle_graph(5))) == 3
    with pytest.raises(WeightingError):
        weight_of(f, {})


class TestSpectrum:
    def test_c6(self):
        g = cycle_graph(6)
        assert weight_spectrum(g, Weighting.constant(g)) == [3, 4] == brute_spectrum(g)

    def test_c5(self):
        g = cycle_graph(5)
        assert weight_spectrum(g, Weighting.constant(g)) == [3]

    def test_case1_fixture_k4(self):
        g = triangle_with_quadrangles(4)
        spectrum = weight_spectrum(g, Weighting.constant(g))
        assert {4, 5} <= set(spectrum)
        assert spectrum == brute_spectrum(g)

    def test_rational_weights(self):
        g = path_graph(4)
        w = Weighting(g, [Fraction(1, 2), 3, Fraction(1, 3)])
        # P4's factors: the matching {01, 23} and the full path is not a star
        assert weight_spectrum(g, w) == [Fraction(5, 6)]

    def test_no_factor(self):
        g = Graph.from_edges(3, [(0, 1)])
        assert weight_spectrum(g, Weighting.constant(g)) == []


class TestIsUniform:
    def test_c7(self):
        report = is_uniform(cycle_graph(7), full=True)
        assert report.uniform and report.spectrum == [4]
        assert report.factor_count == 7

    def test_c9(self):
        report = is_uniform(cycle_graph(9), full=True)
        assert not report.uniform and report.spectrum == [5, 6]
        a, b = report.witness
        assert a.size != b.size

    def test_house(self):
        assert is_uniform(house_graph(), full=True).uniform

    def test_early_exit_leaves_count_absent(self):
        report = is_uniform(cycle_graph(9))
        assert not report.uniform and report.factor_count is None and report.witness

    def test_no_factor_is_vacuously_uniform(self):
        report = is_uniform(Graph.from_edges(3, [(0, 1)]))
        assert report.uniform and not report.factor_exists and report.spectrum == []

    @pytest.mark.parametrize("n", range(3, 13))
    def test_cycle_law(self, n):
        # C_n splits into paths on 2 or 3 vertices: n = 2a + 3b with a + b components
        counts = {a + b for a in range(n) for b in range(n) if 2 * a + 3 * b == n}
        assert is_uniform(cycle_graph(n)).uniform == (len(counts) == 1)
        assert is_uniform(cycle_graph(n)).uniform == (n in {3, 4, 5, 7})

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=7))
    def test_report_invariants(self, g):
        report = is_uniform(g, full=True)
        assert report.uniform == (len(report.spectrum) <= 1)
        assert (report.witness is None) == report.uniform
        if g.m <= 12 and g.n:
            assert report.spectrum == brute_spectrum(g)
        if report.factor_exists and g.n:
            assert all(math.ceil(g.n / 2) <= s <= g.n - 1 for s in report.spectrum)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=7))
    def test_early_exit_agrees_with_full(self, g):
        quick, full = is_uniform(g), is_uniform(g, full=True)
        assert quick.uniform == full.uniform
        assert set(quick.spectrum) <= set(full.spectrum)


class TestWeighted:
    def test_c6_alternating(self):
        g = cycle_graph(6)
        w = Weighting(g, {(i, (i + 1) % 6): 1 + i % 2 for i in range(6)})
        ok, witness = is_uniform_weighted(g, w)
        assert not ok
        assert weight_of(witness[0], w) != weight_of(witness[1], w)

    @pytest.mark.parametrize("g", [path_graph(2), path_graph(3), star_graph(4)])
    def test_single_factor(self, g):
        assert len(enumerate_star_factors(g)) == 1
        assert is_uniform_weighted(g, Weighting(g, list(range(1, g.m + 1))))[0]

    def test_c5_constant_seven(self):
        g = cycle_graph(5)
        assert is_uniform_weighted(g, Weighting.constant(g, 7)) == (True, None)

    def test_validation(self):
        g = cycle_graph(4)
        with pytest.raises(WeightingError):
            Weighting(g, [1, 1, 1])
        with pytest.raises(WeightingError):
            Weighting(g, [1, 1, 1, 0])
        with pytest.raises(WeightingError):
            Weighting(g, [1.0, 1, 1, 1])
        with pytest.raises(WeightingError):
            Weighting(g, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 2): 1})

    @settings(max_examples=100, deadline=None)
    @given(
        graphs_without_isolated(max_n=6),
        st.lists(st.integers(1, 5), min_size=15, max_size=15),
        st.fractions(min_value=Fraction(1, 10), max_value=10),
    )
    def test_scaling_invariance(self, g, values, c):
        assume(c > 0)
        w = Weighting(g, values[: g.m])
        assert is_uniform_weighted(g, w)[0] == is_uniform_weighted(g, w.scaled(c))[0]


def pendant_triangle():
    """Triangle 0-1-2 with a leaf 3 hanging from vertex 0."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def triangle_with_tail():
    """Triangle 0-1-2 and the path 0-3-4-5 (3 is not a stem, 4 is)."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5)])


class TestLemmaDetectors:
    def test_lemma2_pendant_triangle(self):
        g = pendant_triangle()
        w = lemma2_witness(g)
        assert w is not None and w.stem == 0 and w.leaf == 3
        assert len(brute_spectrum(g)) > 1

    def test_lemma2_negative(self):
        assert lemma2_witness(cycle_graph(3)) is None
        assert lemma2_witness(house_graph()) is None

    def test_lemma3_tail(self):
        g = triangle_with_tail()
        w = lemma3_violation(g)
        assert w is not None and w.vertex == 0 and w.non_stem == 3
        assert lemma2_witness(g) is None
        assert len(brute_spectrum(g)) > 1

    def test_lemma3_negative(self):
        assert lemma3_violation(cycle_graph(3)) is None
        assert lemma3_violation(house_graph()) is None

    @settings(max_examples=300, deadline=None)
    @given(graphs(max_n=8))
    def test_witnesses_imply_non_uniform(self, g):
        if lemma2_witness(g) is not None or lemma3_violation(g) is not None:
            assert not is_uniform(g).uniform


@settings(max_examples=80, deadline=None)
@given(graphs_without_isolated(max_n=6), st.randoms(use_true_random=False))
def test_edge_deletion_preserves_uniformity(g, rnd):
    """If G is uniform, so is every G - F without isolated vertices."""
    assume(is_uniform(g).uniform)
    edges = g.edges()
    subsets = (
        itertools.chain.from_iterable(itertools.combinations(edges, k) for k in range(len(edges) + 1))
        if len(edges) <= 10
        else ([e for e in edges if rnd.random() < 0.5] for _ in range(500))
    )
    for f in subsets:
        h, isolated = delete_edges(g, f)
        if not isolated:
            assert is_uniform(h).uniform
