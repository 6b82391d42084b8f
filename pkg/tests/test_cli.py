# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import json
import os

import pytest

from conftest import cycle_graph, path_graph
import specgraph.specgraph as cli
from specgraph import main
from specgraph.libs.config import TOLERANCE_ENV
from specgraph.libs.graph import graph6_decode, graph6_encode
from specgraph.libs.spectral import ConvergenceError

QUIET = ['-q', '--threads', '1']


def run_cli(capsys, *argv) -> tuple[int, list[str]]:
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


class TestFamily:
    def test_script_h(self, capsys):
        code, out = run_cli(capsys, 'family', 'scriptH', 'n=9', 'alpha=3')
        assert code == 0
        assert "family: scriptH n=9 alpha=3" in out
        assert "gamma: 4" in out
        assert "gamma_formula: 4" in out

    def test_cycle_values(self, capsys):
        code, out = run_cli(capsys, 'family', 'cycle n=5')
        assert code == 0
        assert "odd_girth: 5" in out
        assert any(line.startswith("q_min: 0.3819660112") for line in out)

    def test_lollipop_without_closed_form(self, capsys):
        code, out = run_cli(capsys, 'family', 'lollipop', 'g=3', 'l=1')
        assert code == 0
        assert "n: 4" in out
        assert "m: 4" in out
        assert "gamma_formula: none" in out

    def test_unrealizable(self, capsys):
        code, out = run_cli(capsys, 'family', 'scriptH', 'n=5', 'alpha=3')
        assert code == 3
        assert out == []

    def test_unknown_family(self, capsys):
        assert run_cli(capsys, 'family', 'nosuch', 'n=3')[0] == 2

    def test_closed_form_mismatch(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, 'gamma_formula', lambda spec: 99)
        code, out = run_cli(capsys, 'family', 'path', 'n=4')
        assert code == 1
        assert "gamma: 2" in out
        assert "gamma_formula: 99" in out


class TestSingleGraphs:
    def test_qmin(self, capsys):
        code, out = run_cli(capsys, 'qmin', 'Bw')
        assert code == 0
        assert out[0].startswith("Bw q_min=1 multiplicity=2")

    def test_qmin_vector(self, capsys):
        text = graph6_encode(cycle_graph(5))
        code, out = run_cli(capsys, 'qmin', '--vector', text)
        assert code == 0
        assert out[1].startswith("vector: ")
        assert len(out[1].split()) == 6

    def test_qmin_from_file(self, capsys, tmp_path):
        path = tmp_path / 'graphs.g6'
        path.write_text(">>graph6<<Bw\n\n{}\n".format(graph6_encode(path_graph(4))))
        code, out = run_cli(capsys, 'qmin', '-i', str(path))
        assert code == 0
        assert len(out) == 2

    def test_gamma(self, capsys):
        text = graph6_encode(path_graph(4))
        code, out = run_cli(capsys, 'gamma', text)
        assert code == 0
        assert out == ["{} gamma=2 witness=0,2".format(text)]

    def test_gamma_exclude(self, capsys):
        text = graph6_encode(path_graph(3))
        code, out = run_cli(capsys, 'gamma', '--exclude', '1', text)
        assert code == 0
        assert out == ["{} gamma=2 witness=0,2".format(text)]

    def test_gamma_infeasible(self, capsys):
        assert run_cli(capsys, 'gamma', '--exclude', '0,1,2', 'Bw')[0] == 3

    def test_convergence_failure(self, capsys, monkeypatch):
        def diverge(g):
            raise ConvergenceError("Residual above tolerance")
        monkeypatch.setattr(cli, 'q_min', diverge)
        assert run_cli(capsys, 'qmin', 'Bw')[0] == 1

    def test_no_graph(self, capsys):
        assert run_cli(capsys, 'qmin')[0] == 2

    def test_bad_graph6(self, capsys):
        assert run_cli(capsys, 'decode', 'B!')[0] == 2

    def test_missing_input_file(self, capsys, tmp_path):
        assert run_cli(capsys, 'gamma', '-i', str(tmp_path / 'missing.g6'))[0] == 2


class TestEncodeDecode:
    def test_encode_triangle(self, capsys):
        code, out = run_cli(capsys, 'encode', '-n', '3', '0-1', '1-2', '0-2')
        assert code == 0
        assert out == ["Bw"]

    def test_decode_triangle(self, capsys):
        code, out = run_cli(capsys, 'decode', 'Bw')
        assert code == 0
        assert out == ["n=3 m=3 edges=0-1 0-2 1-2"]

    def test_encode_matches_library(self, capsys):
        code, out = run_cli(capsys, 'encode', '-n', '4', '0-1', '1-2', '2-3')
        assert out == [graph6_encode(path_graph(4))]
        assert graph6_decode(out[0]) == path_graph(4)

    def test_edge_out_of_range(self, capsys):
        assert run_cli(capsys, 'encode', '-n', '3', '0-5')[0] == 2

    def test_bad_edge_text(self, capsys):
        assert run_cli(capsys, 'encode', '-n', '3', 'a-b')[0] == 2


class TestSearch:
    def test_empty_domain(self, capsys):
        code, out = run_cli(capsys, 'search', '-n', '4', '--gamma', '3', *QUIET)
        assert code == 0
        assert "status: empty-domain" in out
        assert not any(line.startswith("qstar:") for line in out)

    def test_nonbipartite_order_five(self, capsys):
        code, out = run_cli(capsys, 'search', '-n', '5', '--nonbipartite', '--unicyclic', *QUIET)
        assert code == 0
        assert "status: pass" in out
        assert "domain: connected n=5 nonbipartite unicyclic (4 graphs, full)" in out
        assert any(line.startswith("qstar: ") for line in out)

    def test_output_is_deterministic(self, capsys):
        first = run_cli(capsys, 'search', '-n', '5', '--gamma', '2', '--nonbipartite', *QUIET)
        second = run_cli(capsys, 'search', '-n', '5', '--gamma', '2', '--nonbipartite', *QUIET)
        assert first == second

    def test_missing_order(self, capsys):
        assert run_cli(capsys, 'search', '--gamma', '2', *QUIET)[0] == 2

    def test_json_report(self, capsys, tmp_path):
        base = tmp_path / 'report'
        code, _ = run_cli(capsys, 'search', '-n', '5', '--nonbipartite', '-o', str(base), '-f', 'json', *QUIET)
        assert code == 0
        with open(str(base) + '.json') as f:
            out = json.load(f)
        assert out['suite'] == 'search'
        assert out['status'] == 'pass'
        assert out['domain']['count'] == 16
        assert out['params']['order'] == 5
        assert [p for p in os.listdir(tmp_path) if p.startswith('.specgraph-')] == []

    def test_graph6_report_lists_survivors(self, capsys, tmp_path):
        base = tmp_path / 'survivors'
        code, _ = run_cli(capsys, 'search', '-n', '5', '--nonbipartite', '-o', str(base), '-f', 'graph6', *QUIET)
        assert code == 0
        lines = (tmp_path / 'survivors.graph6').read_text().split()
        assert len(lines) == len(set(lines)) == 16
        assert all(graph6_decode(line).order == 5 for line in lines)

    def test_input_file_sets_order(self, capsys, tmp_path):
        path = tmp_path / 'domain.g6'
        path.write_text("\n".join(graph6_encode(g) for g in (cycle_graph(5), path_graph(5))) + "\n")
        code, out = run_cli(capsys, 'search', '-i', str(path), '--nonbipartite', *QUIET)
        assert code == 0
        assert "domain: connected n=5 nonbipartite (1 graphs, full)" in out

    def test_input_offset(self, capsys, tmp_path):
        path = tmp_path / 'domain.g6'
        path.write_text("\n".join(graph6_encode(g) for g in (cycle_graph(5), path_graph(5))) + "\n")
        code, out = run_cli(capsys, 'search', '-i', str(path), '--offset', '1', *QUIET)
        assert code == 0
        assert any("(1 graphs, full)" in line for line in out)

    def test_spool(self, capsys, tmp_path):
        spool = tmp_path / 'spool.g6'
        code, out = run_cli(capsys, 'search', '-n', '5', '--nonbipartite', '--spool', str(spool), *QUIET)
        assert code == 0
        assert len(spool.read_text().split()) == 16
        assert any("(16 graphs, full)" in line for line in out)

    def test_csv_report(self, capsys, tmp_path):
        base = tmp_path / 'report.csv'
        code, _ = run_cli(capsys, 'search', '-n', '5', '--gamma', '1', '-o', str(base), '-f', 'csv', *QUIET)
        assert code == 0
        rows = base.read_text().splitlines()
        assert rows[0].startswith("suite,params,domain,count")
        assert rows[1].startswith("search,")


class TestVerify:
    def test_near_half(self, capsys):
        code, out = run_cli(capsys, 'verify', 'near-half', '-n', '5', *QUIET)
        assert code == 0
        assert out[0] == "suite: near-half"
        assert "status: pass" in out
        assert any(line.startswith("candidate: scriptH n=5 alpha=1") for line in out)

    def test_odd_girth_infeasible(self, capsys):
        code, out = run_cli(capsys, 'verify', 'odd-girth', '-n', '9', '--gamma', '4', *QUIET)
        assert code == 0
        assert "status: empty-domain" in out
        assert "note: smallest feasible order for gamma=4: 10" in out

    def test_low_domination_subscans_are_indented(self, capsys):
        code, out = run_cli(capsys, 'verify', 'low-domination', '-n', '4', *QUIET)
        assert code == 0
        assert any(line.startswith("  suite: ") for line in out)

    def test_named_suites(self, capsys):
        code, out = run_cli(capsys, 'verify', 'theorem-1.1', '--n', '5', *QUIET)
        assert code == 0
        assert out[0] == "suite: near-half"
        assert "status: pass" in out
        code, out = run_cli(capsys, 'verify', 'theorem-1.2', '--n', '9', '--gamma', '4', *QUIET)
        assert code == 0
        assert out[0] == "suite: odd-girth"
        assert "status: empty-domain" in out

    def test_failed_suite(self, capsys, monkeypatch):
        runners = cli.implemented_suites()

        def failing(config):
            report = runners['near-half'](config)
            report.set_status('fail')
            return report
        monkeypatch.setattr(cli, 'implemented_suites', lambda: {'near-half': failing})
        code, out = run_cli(capsys, 'verify', 'near-half', '-n', '5', *QUIET)
        assert code == 1
        assert "status: fail" in out

    def test_missing_order(self, capsys):
        assert run_cli(capsys, 'verify', 'near-half', *QUIET)[0] == 2

    def test_unknown_suite(self, capsys):
        assert run_cli(capsys, 'verify', 'nosuch', '-n', '5')[0] == 2

    def test_unknown_battery(self, capsys):
        assert run_cli(capsys, 'verify', 'preliminaries', '--battery', 'nosuch=3', *QUIET)[0] == 2

    def test_xlsx_report(self, capsys, tmp_path):
        pytest.importorskip('xlsxwriter')
        base = tmp_path / 'near-half'
        code, _ = run_cli(capsys, 'verify', 'near-half', '-n', '5', '-o', str(base), '-f', 'xlsx', *QUIET)
        assert code == 0
        assert (tmp_path / 'near-half.xlsx').stat().st_size > 0


class TestConfiguration:
    def test_unknown_flag(self, capsys):
        assert main(['family', '--nosuch']) == 2

    def test_unknown_command(self, capsys):
        assert main(['nosuch']) == 2

    def test_tolerance_override(self, capsys):
        code, out = run_cli(capsys, 'qmin', '--tolerance', 'eigen=1e-9', 'Bw')
        assert code == 0
        assert out[0].startswith("Bw q_min=1 multiplicity=2")

    @pytest.mark.parametrize("value", ["eigen=0", "nosuch=1e-9", "eigen=x"])
    def test_bad_tolerance(self, capsys, value):
        assert run_cli(capsys, 'qmin', '--tolerance', value, 'Bw')[0] == 2

    def test_bad_tolerance_environment(self, capsys, monkeypatch):
        monkeypatch.setenv(TOLERANCE_ENV, "abc")
        assert run_cli(capsys, 'qmin', 'Bw')[0] == 2

    def test_bad_threads(self, capsys):
        assert run_cli(capsys, 'search', '-n', '4', '--threads', '0')[0] == 2

    def test_config_file(self, capsys, tmp_path):
        config_file = tmp_path / 'specgraph.yml'
        config_file.write_text("format: csv\nthreads: 1\nprogress: false\noutput: {}\n".format(tmp_path / 'run'))
        code, _ = run_cli(capsys, 'search', '-n', '5', '--gamma', '1', '-c', str(config_file))
        assert code == 0
        assert (tmp_path / 'run.csv').exists()

    def test_flags_win_over_config_file(self, capsys, tmp_path):
        config_file = tmp_path / 'specgraph.yml'
        config_file.write_text("format: csv\nthreads: 1\nprogress: false\n")
        base = tmp_path / 'run'
        code, _ = run_cli(capsys, 'search', '-n', '5', '--gamma', '1', '-c', str(config_file), '-o', str(base),
                          '-f', 'json')
        assert code == 0
        assert (tmp_path / 'run.json').exists()

    def test_config_file_unknown_key(self, capsys, tmp_path):
        config_file = tmp_path / 'specgraph.yml'
        config_file.write_text("level: high\n")
        assert run_cli(capsys, 'search', '-n', '4', '-c', str(config_file))[0] == 2

    def test_missing_config_file(self, capsys, tmp_path):
        assert run_cli(capsys, 'search', '-n', '4', '-c', str(tmp_path / 'none.yml'))[0] == 2
