# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

from itertools import combinations

import pytest

from conftest import atlas_connected, cycle_graph, path_graph, petersen, star_graph
from specgraph.libs.domination import (InfeasibleConstraintsError, corona_characterization, domination_number,
                                       gamma, gamma_formula, is_dominating_set,
                                       minimal_dominating_set_avoiding_pendants, ore_bound)
from specgraph.libs.families import FamilySpec, corona, lollipop, script_h_realizable, sunlike, triangle_comb
from specgraph.libs.graph import Graph


def brute_force(g: Graph) -> tuple[int, tuple[int, ...]]:
    for size in range(1, g.order + 1):
        for s in combinations(g.vertices(), size):
            if is_dominating_set(g, s):
                return size, s
    return 0, ()


class TestIsDominatingSet:
    def test_examples(self):
        assert is_dominating_set(cycle_graph(4), [0, 2])
        assert is_dominating_set(path_graph(3), [1])
        assert not is_dominating_set(cycle_graph(7), [0, 3])
        assert not is_dominating_set(path_graph(3), [])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_dominating_set(path_graph(3), [5])

    def test_rejects_non_graph(self):
        with pytest.raises(TypeError):
            is_dominating_set([[0, 1]], [0])


class TestDominationNumber:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_brute_force_on_atlas(self, n):
        for h in atlas_connected(n):
            g = Graph.from_networkx(h)
            size, first = brute_force(g)
            result = domination_number(g)
            assert result.gamma == size == gamma(g)
            assert result.witness.as_tuple() == first

    def test_witnesses(self):
        assert domination_number(star_graph(4)).witness.as_tuple() == (0,)
        assert domination_number(lollipop(3, 1).graph).witness.as_tuple() == (2,)
        assert domination_number(path_graph(4)).witness.as_tuple() == (0, 2)

    def test_petersen(self):
        result = domination_number(petersen())
        assert result.gamma == 3
        assert is_dominating_set(petersen(), result.witness)

    def test_empty_graph(self):
        assert gamma(Graph.empty(0)) == 0
        assert domination_number(Graph.empty(0)).gamma == 0

    def test_include(self):
        result = domination_number(path_graph(3), include=[0])
        assert result.gamma == 2
        assert 0 in result.witness

    def test_exclude(self):
        result = domination_number(path_graph(3), exclude=[1])
        assert result.gamma == 2
        assert result.witness.as_tuple() == (0, 2)

    def test_infeasible_constraints(self):
        with pytest.raises(InfeasibleConstraintsError):
            domination_number(path_graph(3), exclude=[0, 1])

    def test_overlapping_constraints(self):
        with pytest.raises(ValueError):
            domination_number(path_graph(3), include=[1], exclude=[1])

    def test_to_dict(self):
        assert domination_number(path_graph(4)).to_dict() == {'gamma': 2, 'witness': [0, 2], 'include': [],
                                                              'exclude': []}


class TestPendants:
    def test_star(self):
        result = minimal_dominating_set_avoiding_pendants(star_graph(4))
        assert result.witness.as_tuple() == (0,)

    def test_path(self):
        result = minimal_dominating_set_avoiding_pendants(path_graph(4))
        assert result.gamma == 2
        assert result.witness.as_tuple() == (1, 2)

    def test_matches_unconstrained_gamma(self):
        for g in (lollipop(3, 1).graph, triangle_comb(9, 3).graph, sunlike(6, 2).graph):
            assert minimal_dominating_set_avoiding_pendants(g).gamma == gamma(g)

    def test_needs_a_pendant(self):
        with pytest.raises(ValueError):
            minimal_dominating_set_avoiding_pendants(cycle_graph(5))


class TestClassicalBounds:
    def test_ore_bound(self):
        assert ore_bound(1) == 1
        assert ore_bound(2) == 1
        assert ore_bound(9) == 4

    @pytest.mark.parametrize("n", range(2, 7))
    def test_ore_bound_holds_on_atlas(self, n):
        for h in atlas_connected(n):
            assert gamma(Graph.from_networkx(h)) <= ore_bound(n)

    def test_corona_characterization(self):
        assert corona_characterization(cycle_graph(4))
        assert corona_characterization(path_graph(4))
        assert corona_characterization(corona('cycle', 5).graph)
        assert not corona_characterization(cycle_graph(5))
        assert not corona_characterization(star_graph(3))

    @pytest.mark.parametrize("n", [4, 6])
    def test_characterization_matches_gamma_half(self, n):
        for h in atlas_connected(n):
            g = Graph.from_networkx(h)
            assert corona_characterization(g) == (gamma(g) == n // 2)


class TestGammaFormula:
    def test_examples(self):
        assert gamma_formula(FamilySpec.of('path', n=10)) == 4
        assert gamma_formula(FamilySpec.of('sunlike', g=7, k=2)) == 3
        assert gamma_formula(FamilySpec.of('scriptH', n=9, alpha=3)) == 4
        assert gamma_formula(FamilySpec.of('scriptH', n=3, alpha=0)) == 1

    def test_path_and_cycle(self):
        for n in range(3, 13):
            assert gamma_formula(FamilySpec.of('path', n=n)) == gamma(path_graph(n))
            assert gamma_formula(FamilySpec.of('cycle', n=n)) == gamma(cycle_graph(n))

    def test_sunlike(self):
        for g in range(3, 10):
            for k in range(0, g + 1):
                assert gamma_formula(FamilySpec.of('sunlike', g=g, k=k)) == gamma(sunlike(g, k).graph)

    def test_script_h(self):
        for n in range(3, 13):
            for alpha in range(0, n // 2 + 1):
                if script_h_realizable(n, alpha):
                    spec = FamilySpec.of('scriptH', n=n, alpha=alpha)
                    assert gamma_formula(spec) == gamma(triangle_comb(n, alpha).graph)

    def test_corona(self):
        assert gamma_formula(FamilySpec.of('corona', base='cycle', n=5)) == gamma(corona('cycle', 5).graph) == 5

    def test_no_closed_form(self):
        with pytest.raises(ValueError):
            gamma_formula(FamilySpec.of('lollipop', g=5, l=2))

    def test_rejects_text(self):
        with pytest.raises(TypeError):
            gamma_formula("path n=4")
