# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import pytest

from conftest import cycle_graph, path_graph
from specgraph.libs.canonical import canonical_form
from specgraph.libs.config import Config
from specgraph.libs.enumeration import GraphFilter, connected_graphs_partition
from specgraph.libs.families import FamilySpec, f_graph, lollipop
from specgraph.libs.report import BatteryTally, SearchReport
from specgraph.libs.spectral import CheckOutcome
from specgraph.libs.verify import (ScanResult, battery_structure, certify_f_graph_structure, certify_low_domination,
                                   certify_near_half_domination, certify_preliminaries, certify_short_odd_girth,
                                   certify_unicyclic_near_half, compare, f_graph_plans, f_structure_outcome,
                                   family_match, implemented_suites, least_alpha, low_domination_candidate,
                                   odd_girth_feasible, scan, scan_report, smallest_feasible_order, suite_lemma_2_11,
                                   suite_theorem_1_1, suite_theorem_1_2, suite_theorem_3_2, suite_theorem_4_4_and_4_7,
                                   tie_tolerance)


def argmin_forms(result: ScanResult) -> list:
    return [form for form, _, _ in result.argmin()]


class TestScanResult:
    def test_keeps_ties_once(self):
        result = ScanResult()
        result.add(cycle_graph(5), 0.5)
        result.add(cycle_graph(5).relabel((1, 0, 2, 3, 4)), 0.5)
        result.add(path_graph(5), 0.5 + 1e-12)
        result.add(lollipop(3, 2).graph, 0.9)
        assert result.count == 4
        assert result.qstar == 0.5
        assert len(result.argmin()) == 2

    def test_lower_value_drops_old_ties(self):
        result = ScanResult()
        result.add(cycle_graph(5), 0.5)
        result.add(path_graph(5), 0.1)
        assert [g for _, g, _ in result.argmin()] == [path_graph(5)]

    def test_collects_survivors(self):
        result = ScanResult()
        result.add(cycle_graph(3), 1.0, collect=True)
        assert result.survivors == ["Bw"]

    def test_tie_tolerance(self):
        assert tie_tolerance(0.5) == Config.tolerance('tie')
        assert tie_tolerance(10.0) == pytest.approx(10 * Config.tolerance('tie'))

    def test_merge_is_order_insensitive(self):
        f = GraphFilter(6, nonbipartite=True)
        parts = [scan(f, stream=connected_graphs_partition(6, p, 3)) for p in range(3)]
        forward, backward = ScanResult(), ScanResult()
        for part in parts:
            forward.merge(part)
        for part in reversed(parts):
            backward.merge(part)
        whole = scan(f)
        assert forward.count == backward.count == whole.count
        assert forward.qstar == backward.qstar == whole.qstar
        assert argmin_forms(forward) == argmin_forms(backward) == argmin_forms(whole)

    def test_parallel_matches_single_process(self):
        f = GraphFilter(6, nonbipartite=True, gamma=2)
        single = scan(f, threads=1)
        parallel = scan(f, threads=2)
        assert parallel.count == single.count
        assert parallel.qstar == pytest.approx(single.qstar, abs=1e-12)
        assert argmin_forms(parallel) == argmin_forms(single)


class TestReports:
    def test_scan_report(self):
        f = GraphFilter(5, nonbipartite=True, unicyclic=True)
        report = scan_report('search', {'n': 5}, f, scan(f))
        assert report.count == 4
        assert report.status == 'pass'
        assert report.description == "connected n=5 nonbipartite unicyclic"
        assert report.argmin[0].q == pytest.approx(report.qstar)

    def test_empty_domain(self):
        f = GraphFilter(4, gamma=3)
        report = scan_report('search', {'n': 4}, f, scan(f))
        assert report.status == 'empty-domain'
        assert report.qstar is None
        assert report.notes

    def test_family_match(self):
        assert family_match(canonical_form(path_graph(5))) == "path n=5"
        assert family_match(canonical_form(cycle_graph(5))) == "sunlike g=5 k=0"
        assert family_match(canonical_form(lollipop(3, 1).graph)).startswith("scriptH")

    def test_compare_unrealizable_candidate(self):
        f = GraphFilter(5, nonbipartite=True)
        report = scan_report('search', {'n': 5}, f, scan(f))
        compare(report, f, [FamilySpec.of('scriptH', n=5, alpha=3)])
        assert report.comparisons[0].q is None
        assert not report.comparisons[0].matches
        assert any("not realizable" in note for note in report.notes)

    def test_to_dict_schema(self):
        report = certify_near_half_domination(5)
        out = report.to_dict()
        for key in ('suite', 'params', 'domain', 'tolerance', 'qstar', 'argmin', 'unique', 'comparisons',
                    'runtime_ms', 'status'):
            assert key in out
        assert set(out['domain']) == {'description', 'count', 'scope'}
        assert set(out['argmin'][0]) == {'graph6', 'canonical', 'q', 'family_match'}

    def test_bad_status(self):
        with pytest.raises(ValueError):
            SearchReport('x').set_status('unknown')

    def test_battery_tally(self):
        tally = BatteryTally('t')
        tally.record(CheckOutcome.ok())
        tally.record(CheckOutcome.skipped('multiple'))
        for i in range(7):
            tally.check(False, 'g{}'.format(i), 'bad')
        assert (tally.passed, tally.skipped, tally.failed, tally.total) == (1, 1, 7, 9)
        assert len(tally.samples) == 5
        other = BatteryTally('t', passed=2)
        tally.merge(other)
        assert tally.passed == 3


class TestNearHalf:
    def test_order_five(self):
        report = certify_near_half_domination(5)
        assert report.status == 'pass'
        assert report.unique
        assert report.count > 0
        assert report.argmin[0].family_match.startswith("scriptH")
        assert len(report.comparisons) == 2
        assert any(c.matches for c in report.comparisons)

    def test_order_seven(self):
        assert certify_near_half_domination(7).status == 'pass'

    @pytest.mark.parametrize("n", [4, 6, 11])
    def test_order_bounds(self, n):
        with pytest.raises(ValueError):
            certify_near_half_domination(n)

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            certify_near_half_domination(5.0)


class TestOddGirth:
    def test_feasibility(self):
        assert odd_girth_feasible(10, 4)
        assert not odd_girth_feasible(9, 4)
        assert not odd_girth_feasible(10, 3.5)
        assert smallest_feasible_order(4) == 10
        assert smallest_feasible_order(3) is None
        assert least_alpha(10, 4) == 2

    def test_infeasible_gamma_is_empty_domain(self):
        report = certify_short_odd_girth(9, 4)
        assert report.status == 'empty-domain'
        assert report.passed
        assert any("smallest feasible order for gamma=4: 10" in note for note in report.notes)

    def test_fractional_gamma(self):
        report = certify_short_odd_girth(9, 3.5)
        assert report.status == 'empty-domain'
        assert len(report.notes) == 1

    @pytest.mark.slow
    def test_reduced_domain(self):
        report = certify_short_odd_girth(10, 4)
        assert report.scope == 'reduced'
        assert report.status == 'reduced'
        assert report.params['alpha'] == 2
        assert any("spanning unicyclic subgraph" in note for note in report.notes)


class TestUnicyclicNearHalf:
    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_small_orders(self, n):
        report = certify_unicyclic_near_half(n)
        assert report.status == 'pass'
        assert len(report.subscans) == 1
        assert report.subscans[0].status == 'pass'
        assert report.argmin[0].canonical == report.subscans[0].argmin[0].canonical


class TestLowDomination:
    def test_candidates(self):
        assert low_domination_candidate(7, 1) == FamilySpec.of('c3star', n=7, k=0)
        assert low_domination_candidate(7, 2) == FamilySpec.of('c3star', n=7, k=3)
        assert low_domination_candidate(7, 3) is None

    def test_order_four_is_the_paw(self):
        report = certify_low_domination(4)
        assert report.status == 'pass'
        assert [sub.params['gamma'] for sub in report.subscans] == [1]
        assert report.subscans[0].comparisons[0].candidate == "c3star n=4 k=0"

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_small_orders(self, n):
        report = certify_low_domination(n)
        assert report.status == 'pass'
        assert len(report.subscans) == (n + 1) // 3
        assert report.count == sum(sub.count for sub in report.subscans)


class TestFStructure:
    def test_plans_respect_order(self):
        for g, l, plan in f_graph_plans(9, (5, 7)):
            assert g + l + sum(plan.values()) <= 9
            assert all(count == 1 for v, count in plan.items() if v != g + l - 1)

    def test_outcome_of_bare_lollipop(self):
        f, outcome = f_structure_outcome(f_graph(5, 2), 5, 2)
        assert f == 5
        assert outcome

    def test_small_run(self):
        report = certify_f_graph_structure(max_order=9, girths=(5, 7))
        assert report.status == 'pass'
        assert report.count > 0
        assert report.batteries[0].failed == 0
        assert any(note.startswith("f histogram") for note in report.notes)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            certify_f_graph_structure(max_order=9, girths=(4,))
        with pytest.raises(ValueError):
            certify_f_graph_structure(max_order=5)


class TestPreliminaries:
    def test_selected_batteries(self):
        report = certify_preliminaries({'path_cycle': 12, 'ore': 5, 'comb': 10}, only=['path_cycle', 'ore', 'comb'])
        assert report.status == 'pass'
        assert [t.name for t in report.batteries] == ['ore', 'path_cycle', 'comb']
        assert report.count == sum(t.total for t in report.batteries)

    def test_spectral_batteries(self):
        limits = {'bipartite_law': 6, 'mindeg': 6, 'interlacing': 5, 'cycle_spectra': 15, 'witness': 5}
        report = certify_preliminaries(limits, only=list(limits))
        assert report.status == 'pass'
        assert all(t.failed == 0 for t in report.batteries)

    def test_domination_batteries(self):
        limits = {'pendants': 6, 'corona': 6, 'sunlike': 8, 'packed': 10, 'h_relations': 8, 'random_sunlike': 20}
        report = certify_preliminaries(limits, only=list(limits))
        assert report.status == 'pass'

    def test_structure_battery(self):
        tallies = battery_structure(6, 10, 7)
        assert {t.name for t in tallies} == {'unicyclic_signs', 'tree_monotone', 'zero_branch',
                                             'odd_cycle_symmetry', 'triangle_attachment_max'}
        assert all(t.failed == 0 for t in tallies)
        assert sum(t.passed for t in tallies) > 0

    def test_relocation_battery(self):
        report = certify_preliminaries({'relocation': 4}, only=['relocation'])
        assert report.status == 'pass'
        assert report.batteries[0].passed > 0

    def test_unknown_battery(self):
        with pytest.raises(ValueError):
            certify_preliminaries(only=['nosuch'])
        with pytest.raises(ValueError):
            certify_preliminaries({'nosuch': 3}, only=['ore'])


class TestRegistry:
    def test_every_suite_is_implemented(self):
        assert sorted(implemented_suites()) == sorted(Config.suites() + list(Config.suite_aliases()))

    def test_aliases_share_runners(self):
        suites = implemented_suites()
        for alias, name in Config.suite_aliases().items():
            assert suites[alias] is suites[name]

    def test_config_resolves_alias(self):
        config = Config('verify', suite='theorem-1.2', n=9, gamma=4, threads=1, progress=False)
        assert config.suite == 'odd-girth'
        assert implemented_suites()[config.suite](config).status == 'empty-domain'

    def test_operation_names(self):
        assert suite_theorem_1_1 is certify_near_half_domination
        assert suite_theorem_1_2 is certify_short_odd_girth
        assert suite_theorem_4_4_and_4_7 is certify_unicyclic_near_half
        assert suite_lemma_2_11 is certify_low_domination
        assert suite_theorem_3_2 is certify_f_graph_structure

    def test_suite_from_config(self):
        config = Config('verify', suite='near-half', n=5, threads=1, progress=False)
        report = implemented_suites()[config.suite](config)
        assert report.status == 'pass'

    def test_missing_order(self):
        config = Config('verify', suite='near-half', threads=1)
        with pytest.raises(ValueError):
            implemented_suites()[config.suite](config)
