# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import random

import networkx as nx
import pytest

from conftest import cycle_graph, path_graph, petersen, star_graph
from specgraph.libs.canonical import (MAX_CANONICAL_ORDER, are_isomorphic, canonical_form, canonical_graph,
                                      canonical_labeling, canonical_labeling_and_form)
from specgraph.libs.graph import Graph, GraphError


def shuffled(g: Graph, seed: int) -> Graph:
    perm = list(g.vertices())
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


class TestCanonicalForm:
    def test_invariant_under_relabeling(self):
        base = canonical_form(cycle_graph(5))
        for seed in range(10):
            assert canonical_form(shuffled(cycle_graph(5), seed)) == base

    def test_path_and_star_differ(self):
        assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))

    @pytest.mark.parametrize("n, expected", [(3, 4), (4, 11), (5, 34), (6, 156)])
    def test_atlas_classes_are_distinct(self, n, expected):
        graphs = [Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
        assert len(graphs) == expected
        assert len({canonical_form(g) for g in graphs}) == expected

    def test_regular_graphs(self):
        g = petersen()
        for seed in range(5):
            assert canonical_form(shuffled(g, seed)) == canonical_form(g)
        prism = Graph.from_networkx(nx.circular_ladder_graph(5))
        assert canonical_form(prism) != canonical_form(g)

    def test_form_graph_is_canonical_graph(self):
        g = Graph.from_networkx(nx.lollipop_graph(4, 3))
        assert canonical_form(g).graph() == canonical_graph(g)
        assert nx.is_isomorphic(canonical_graph(g).to_networkx(), g.to_networkx())

    def test_labeling_is_a_permutation(self):
        g = shuffled(Graph.from_networkx(nx.barbell_graph(3, 2)), 3)
        perm = canonical_labeling(g)
        assert sorted(perm) == list(g.vertices())
        assert canonical_labeling_and_form(g) == (perm, canonical_form(g))

    def test_text_is_graph6(self):
        assert canonical_form(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])).text == "Bw"

    def test_empty_graph(self):
        assert canonical_form(Graph.empty(0)).order == 0
        assert canonical_labeling(Graph.empty(0)) == ()

    def test_order_limit(self):
        with pytest.raises(GraphError):
            canonical_form(Graph.empty(MAX_CANONICAL_ORDER + 1))


class TestIsomorphism:
    def test_agrees_with_networkx(self):
        graphs = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 5]
        rng = random.Random(7)
        for _ in range(200):
            a, b = rng.choice(graphs), rng.choice(graphs)
            assert are_isomorphic(Graph.from_networkx(a), Graph.from_networkx(b)) == nx.is_isomorphic(a, b)

    def test_shuffled_copy(self):
        g = Graph.from_networkx(nx.random_regular_graph(3, 12, seed=4))
        assert are_isomorphic(g, shuffled(g, 11))
