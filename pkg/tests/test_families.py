# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import networkx as nx
import pytest

from conftest import complete_graph, cycle_graph, path_graph
from specgraph.libs.canonical import are_isomorphic
from specgraph.libs.families import (FamilySpec, FLayout, UnrealizableFamilyError, build, c3_star, catalog, complete,
                                     corona, cycle, f_graph, f_layouts, h_family, lollipop, path, script_h,
                                     script_h_realizable, sunlike, sunlike_star, triangle_comb, triangle_path_family)
from specgraph.libs.graph import Graph, girth, is_connected, is_unicyclic, p_dominators, pendant_vertices


class TestFamilySpec:
    def test_text_round_trip(self):
        for text in ("scriptH n=9 alpha=3", "fgraph g=5 l=1 attach=1:1,3:1", "h1 eps=7 k=2 a=1,3 s=2",
                     "corona base=cycle n=4", "lollipop g=3 l=2"):
            assert FamilySpec.parse(text).text == text

    def test_default_s_is_omitted(self):
        assert FamilySpec.of('h2', eps=7, k=2, s=1).text == "h2 eps=7 k=2"

    def test_aliases_and_case(self):
        assert FamilySpec.parse("SCRIPTH n=9 α=3") == FamilySpec.of('scriptH', n=9, alpha=3)

    def test_parameter_order_is_normalised(self):
        assert FamilySpec.parse("lollipop l=2 g=3").text == "lollipop g=3 l=2"

    def test_get(self):
        spec = FamilySpec.parse("fgraph g=5 l=1 attach=3:1,1:1")
        assert spec.get('g') == 5
        assert spec.get('attach') == ((1, 1), (3, 1))
        assert FamilySpec.parse("h2 eps=7 k=2").get('s') == 1

    @pytest.mark.parametrize("text", ["", "nosuch n=3", "path", "path n=3 n=4", "path m=3", "path n=x",
                                      "corona base=star n=3", "lollipop g=3 l"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            FamilySpec.parse(text)

    def test_rejects_non_str(self):
        with pytest.raises(TypeError):
            FamilySpec.parse(3)


class TestBasicFamilies:
    def test_path_cycle_complete(self):
        assert path(1).graph == Graph.empty(1)
        assert path(5).graph == path_graph(5)
        assert cycle(3).graph == complete_graph(3)
        assert cycle(6).graph == cycle_graph(6)
        assert complete(4).graph.size == 6

    @pytest.mark.parametrize("builder, n", [(path, 0), (cycle, 2), (complete, 0)])
    def test_too_small(self, builder, n):
        with pytest.raises(ValueError):
            builder(n)

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            path(3.0)

    def test_lollipop(self):
        member = lollipop(3, 1)
        assert member.graph.order == 4
        assert pendant_vertices(member.graph).as_tuple() == (3,)
        assert member.vertex('v4') == 3
        g = lollipop(5, 2).graph
        assert girth(g) == 5
        assert is_unicyclic(g)
        assert pendant_vertices(g).as_tuple() == (6,)

    def test_lollipop_matches_networkx_tadpole(self):
        assert nx.is_isomorphic(lollipop(5, 3).graph.to_networkx(), nx.tadpole_graph(5, 3))

    def test_unknown_vertex_name(self):
        with pytest.raises(KeyError):
            lollipop(3, 1).vertex('v9')


class TestC3Star:
    def test_path_only_is_lollipop(self):
        assert c3_star(6, 3).graph == lollipop(3, 3).graph
        assert c3_star(4, 1).graph == lollipop(3, 1).graph

    def test_pendants_at_path_end(self):
        member = c3_star(7, 2)
        g = member.graph
        end = member.vertex('v5')
        assert g.degree(end) == 3
        assert member.vertex('w1') in pendant_vertices(g)
        assert p_dominators(g).as_tuple() == (end,)

    def test_k_zero_hangs_pendants_on_triangle(self):
        g = c3_star(5, 0).graph
        assert g.degree(2) == 4

    def test_bounds(self):
        with pytest.raises(ValueError):
            c3_star(5, 3)
        with pytest.raises(ValueError):
            c3_star(2, 0)


class TestFGraphs:
    def test_bare_lollipop_is_circle(self):
        member = f_graph(3, 1)
        assert member.graph == lollipop(3, 1).graph
        assert member.flags == {'script': True, 'circle': True}

    def test_pendant_on_attachment(self):
        member = f_graph(3, 2, {3: 1})
        assert member.graph.order == 6
        assert member.flags == {'script': True, 'circle': True}
        assert member.spec.text == "fgraph g=3 l=2 attach=3:1"

    def test_two_pendants_on_cycle_vertex(self):
        member = f_graph(5, 1, {1: 2})
        assert member.flags['script'] is False
        assert member.flags['circle'] is False

    def test_attachment_not_a_p_dominator(self):
        member = f_graph(5, 2, {1: 1})
        assert member.flags == {'script': True, 'circle': False}

    def test_pendant_end_cannot_take_pendants(self):
        with pytest.raises(ValueError):
            f_graph(5, 1, {6: 1})

    def test_vertex_outside_lollipop(self):
        with pytest.raises(ValueError):
            f_graph(5, 1, {0: 1})

    def test_layouts_of_lollipop(self):
        assert f_layouts(lollipop(3, 2).graph) == [FLayout((0, 1, 2), (2, 3, 4))]

    def test_layouts_recover_construction(self):
        member = f_graph(5, 2, {1: 1, 6: 2})
        layouts = f_layouts(member.graph)
        assert FLayout(tuple(range(5)), (4, 5, 6)) in layouts
        for layout in layouts:
            assert layout.girth == 5
            assert layout.tail == 2

    def test_layouts_of_non_f_graphs(self):
        assert f_layouts(cycle_graph(5)) == []
        assert f_layouts(path_graph(4)) == []
        assert f_layouts(complete_graph(4)) == []


class TestTrianglePathFamilies:
    def test_bare_triangle(self):
        assert triangle_path_family('h1', 3, 0).graph == complete_graph(3)

    def test_h2_order_and_pendants(self):
        member = triangle_path_family('h2', 7, 2, s=2)
        assert member.graph.order == 10
        assert member.graph.degree(member.vertex('v6')) == 3
        assert member.vertex('tau2') in pendant_vertices(member.graph)

    def test_h1_positions(self):
        member = triangle_path_family('h1', 7, 2, (1, 3))
        g = member.graph
        assert g.has_edge(member.vertex('v1'), member.vertex('tau1'))
        assert g.has_edge(member.vertex('v3'), member.vertex('tau2'))

    def test_h4_and_h5_move_pendants(self):
        h4 = triangle_path_family('h4', 8, 2)
        assert h4.graph.has_edge(h4.vertex('v7'), h4.vertex('tau1'))
        h5 = triangle_path_family('h5', 8, 2)
        assert h5.graph.degree(h5.vertex('v7')) == 4

    def test_h3_hangs_omegas_on_path_end(self):
        member = triangle_path_family('h3', 7, 1, s=3)
        assert member.graph.degree(member.vertex('v7')) == 3

    @pytest.mark.parametrize("variant, eps, k, s", [('h3', 7, 1, 1), ('h4', 7, 0, 1), ('h5', 7, 1, 1),
                                                    ('h1', 3, 1, 1)])
    def test_unrealizable(self, variant, eps, k, s):
        with pytest.raises(UnrealizableFamilyError):
            triangle_path_family(variant, eps, k, s=s)

    def test_bad_positions(self):
        with pytest.raises(UnrealizableFamilyError):
            triangle_path_family('h1', 7, 2, (3, 1))
        with pytest.raises(ValueError):
            triangle_path_family('h1', 7, 2, (1,))

    def test_all_connected_unicyclic(self):
        for variant in ('h1', 'h2', 'h4'):
            for eps in range(4, 9):
                for k in range(1, eps - 1):
                    g = triangle_path_family(variant, eps, k).graph
                    assert is_connected(g) and is_unicyclic(g) and girth(g) == 3


class TestScriptH:
    def test_alpha_zero_is_triangle(self):
        assert triangle_comb(3, 0).graph == complete_graph(3)

    def test_order_and_p_dominators(self):
        for n in range(4, 12):
            for alpha in range(1, n // 2 + 1):
                if not script_h_realizable(n, alpha):
                    continue
                g = triangle_comb(n, alpha).graph
                assert g.order == n
                assert len(p_dominators(g)) == alpha

    def test_matches_packed_h2(self):
        assert triangle_comb(9, 3).graph == triangle_path_family('h2', 7, 2).graph

    def test_realizability(self):
        assert script_h_realizable(9, 4)
        assert not script_h_realizable(5, 3)
        assert not script_h_realizable(4, 0)
        with pytest.raises(UnrealizableFamilyError):
            triangle_comb(5, 3)


class TestSunlikeAndCorona:
    def test_sunlike_without_pendants_is_cycle(self):
        assert sunlike(5, 0).graph == cycle_graph(5)

    def test_full_sunlike_is_corona(self):
        for g in range(3, 7):
            assert sunlike(g, g).graph == corona('cycle', g).graph

    def test_corona_orders(self):
        assert corona('path', 3).graph.order == 6
        assert len(pendant_vertices(corona('complete', 4).graph)) == 4

    def test_corona_bad_base(self):
        with pytest.raises(ValueError):
            corona('star', 3)


class TestRegistry:
    def test_build_from_text(self):
        member = build("scriptH n=9 alpha=3")
        assert member.spec.text == "scriptH n=9 alpha=3"
        assert member.graph == triangle_comb(9, 3).graph

    def test_build_every_variant(self):
        for text in ("path n=4", "cycle n=5", "complete n=3", "lollipop g=5 l=2", "c3star n=7 k=2",
                     "fgraph g=5 l=1 attach=1:1,3:1", "h1 eps=7 k=2 a=1,3", "h2 eps=7 k=2", "h3 eps=7 k=1 s=2",
                     "h4 eps=8 k=2", "h5 eps=8 k=2", "scriptH n=9 alpha=3", "sunlike g=6 k=2",
                     "corona base=path n=3"):
            assert is_connected(build(text).graph)

    def test_operation_names(self):
        assert h_family is triangle_path_family
        assert script_h is triangle_comb
        assert sunlike_star is sunlike
        assert script_h(3, 0).graph == complete_graph(3)

    def test_build_rejects_other_types(self):
        with pytest.raises(TypeError):
            build(3)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_catalog_members_have_order_n(self, n):
        members = list(catalog(n))
        assert members
        for member in members:
            assert member.graph.order == n
            assert is_connected(member.graph)

    def test_catalog_starts_with_most_specific(self):
        assert next(catalog(9)).spec.variant == 'scriptH'
        assert any(are_isomorphic(m.graph, c3_star(7, 2).graph) for m in catalog(7))
