# -*- coding: utf-8 -*-
#
"""

This page contains all subcommands, flags and options for the specgraph tool.

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
import sys
from argparse import ArgumentDefaultsHelpFormatter, ArgumentParser, ArgumentTypeError
from itertools import chain
from typing import Callable, Optional

from .libs.config import Config, Config_YAML
from .libs.domination import InfeasibleConstraintsError, domination_number, gamma_formula
from .libs.enumeration import GraphFilter, filter_stream, source_stream
from .libs.export import implemented_exporters
from .libs.families import UnrealizableFamilyError, build
from .libs.graph import Graph, GraphError, girth, graph6_decode, graph6_encode, odd_girth
from .libs.parser import graphs_from_config, read_graph6, spool_graph6
from .libs.report import SearchReport
from .libs.spectral import ConvergenceError, q_min
from .libs.verify import implemented_suites, scan, scan_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


# ====================
# ARGUMENT TYPES
# ====================
def _edge(text: str) -> tuple[int, int]:
    for sep in ('-', ','):
        if sep in text:
            u, v = text.split(sep, 1)
            try:
                return int(u), int(v)
            except ValueError:
                break
    raise ArgumentTypeError("Expected an edge like 0-1, got '{}'".format(text))


def _vertices(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise ArgumentTypeError("Expected comma separated vertices, got '{}'".format(text)) from None


def _tolerance(text: str) -> tuple[str, float]:
    if '=' not in text:
        raise ArgumentTypeError("Expected KEY=VALUE, got '{}'".format(text))
    key, value = text.split('=', 1)
    try:
        return key.strip(), float(value)
    except ValueError:
        raise ArgumentTypeError("Tolerance '{}' needs a number, got '{}'".format(key, value)) from None


def _battery(text: str) -> tuple[str, int]:
    if '=' not in text:
        raise ArgumentTypeError("Expected NAME=LIMIT, got '{}'".format(text))
    key, value = text.split('=', 1)
    try:
        return key.strip(), int(value)
    except ValueError:
        raise ArgumentTypeError("Battery '{}' needs an integer, got '{}'".format(key, value)) from None


def build_parser() -> ArgumentParser:
    PROG_DESCRIPTION = '''signless Laplacian and domination toolkit\n
Builds named graph families, computes q_min and the domination number, scans
small graph classes for the least q_min and runs certification suites
'''
    CONFIG_FILE_HELP = """path to a .yml file setting format, threads, output, tolerances and
batteries. options given on the command line win. a sample of this file can be found in the doc folder\n"""

    common = ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", dest="verbose", action="count", default=0,
                        help="INFO logging, -vv for DEBUG\n")
    common.add_argument("-q", "--quiet", dest="quiet", action="store_true", help="Disable progress bars\n")
    common.add_argument("-c", "--config-file", dest="config_file", help=CONFIG_FILE_HELP, default=None)
    common.add_argument("-o", "--output", dest="output_file", help="Report file, extension added when missing\n",
                        default=None)
    common.add_argument("-f", "--format", dest="format", choices=Config.formats(), default=None,
                        help="Report format (json when unset)\n")
    common.add_argument("--threads", dest="threads", type=int, default=None,
                        help="Worker processes (all cores when unset)\n")
    common.add_argument("--tolerance", dest="tolerances", type=_tolerance, action="append", default=[],
                        metavar="KEY=VALUE", help="Tolerance override, repeatable\n")

    inputs = ArgumentParser(add_help=False)
    inputs.add_argument("graph6", nargs="*", help="graph6 strings\n")
    inputs.add_argument("-i", "--input", dest="input_file", default=None, help="File with one graph6 per line\n")
    inputs.add_argument("--offset", dest="offset", type=int, default=0, help="Lines of the input file to skip\n")

    filters = ArgumentParser(add_help=False)
    filters.add_argument("-n", "--n", dest="n", type=int, default=None, help="Order\n")
    filters.add_argument("--gamma", dest="gamma", type=int, default=None, help="Domination number\n")
    filters.add_argument("--gamma-min", dest="gamma_min", type=int, default=None)
    filters.add_argument("--gamma-max", dest="gamma_max", type=int, default=None)
    filters.add_argument("--girth", dest="girth", type=int, default=None)
    filters.add_argument("--odd-girth-max", dest="odd_girth_max", type=int, default=None)
    filters.add_argument("--nonbipartite", dest="nonbipartite", action="store_true")
    filters.add_argument("--unicyclic", dest="unicyclic", action="store_true")

    parser = ArgumentParser(prog="specgraph", description=PROG_DESCRIPTION, allow_abbrev=True,
                            formatter_class=ArgumentDefaultsHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("family", parents=[common], help="Build a family member and print its invariants")
    p.add_argument("family", nargs="+", help='Family text, e.g. "scriptH n=9 alpha=3"\n')

    p = sub.add_parser("qmin", parents=[common, inputs], help="Least signless Laplacian eigenvalue")
    p.add_argument("--vector", dest="vector", action="store_true", help="Also print the eigenvector\n")

    p = sub.add_parser("gamma", parents=[common, inputs], help="Domination number and least witness")
    p.add_argument("--include", dest="include", type=_vertices, default=None, help="Vertices forced in, e.g. 0,3\n")
    p.add_argument("--exclude", dest="exclude", type=_vertices, default=None, help="Vertices forced out\n")

    p = sub.add_parser("search", parents=[common, filters], help="Least q_min over a filtered class")
    p.add_argument("-i", "--input", dest="input_file", default=None, help="Scan a graph6 file instead\n")
    p.add_argument("--offset", dest="offset", type=int, default=0, help="Lines of the input file to skip\n")
    p.add_argument("--spool", dest="spool", default=None, help="Write the filtered domain here before scanning\n")

    p = sub.add_parser("verify", parents=[common], help="Run a certification suite")
    p.add_argument("suite", choices=Config.suites() + list(Config.suite_aliases()))
    p.add_argument("-n", "--n", dest="n", type=int, default=None, help="Order, or largest order for f-structure\n")
    p.add_argument("--gamma", dest="gamma", type=int, default=None, help="Domination number for odd-girth\n")
    p.add_argument("--battery", dest="batteries", type=_battery, action="append", default=[],
                   metavar="NAME=LIMIT", help="Preliminaries battery limit, repeatable\n")

    p = sub.add_parser("encode", parents=[common], help="graph6 of an edge list")
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("edges", nargs="*", type=_edge, help="Edges like 0-1\n")

    sub.add_parser("decode", parents=[common, inputs], help="Edge list of graph6 strings")
    return parser


def configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)


def config_from_args(args) -> Config:
    options = {
        'output_file': args.output_file,
        'format': args.format,
        'threads': args.threads,
        'tolerances': dict(args.tolerances),
        'progress': not args.quiet,
    }
    for key in ('family', 'graph6', 'input_file', 'offset', 'n', 'gamma', 'gamma_min', 'gamma_max', 'girth',
                'odd_girth_max', 'nonbipartite', 'unicyclic', 'suite', 'include', 'exclude', 'vector', 'spool',
                'edges'):
        if hasattr(args, key):
            options[key] = getattr(args, key)
    if isinstance(options.get('family'), list):
        options['family'] = " ".join(options['family'])
    if getattr(args, 'batteries', None):
        options['batteries'] = dict(args.batteries)
    if args.config_file is not None:
        return Config_YAML(args.command, args.config_file, **options)
    if options['format'] is None:
        options['format'] = 'json'
    return Config(args.command, **options)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        return run(config)
    except (UnrealizableFamilyError, InfeasibleConstraintsError) as e:
        logger.error("%s", e)
        return EXIT_INFEASIBLE
    except (GraphError, TypeError, ValueError, FileNotFoundError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except ConvergenceError as e:
        logger.error("%s", e)
        return EXIT_FAILED


def run(config: Config) -> int:
    """
    Run one subcommand

    :param config: configuration
    :type config: Config

    :return: exit code
    :raises: TypeError, ValueError, GraphError, UnrealizableFamilyError, InfeasibleConstraintsError
    """
    if not isinstance(config, Config):
        raise TypeError("Expected Config, got '{}' instead".format(type(config)))
    Config.set_overrides(config.tolerances)
    return commands()[config.command](config)


def commands() -> dict[str, Callable[[Config], int]]:
    """
    Enum-like instance mapping every subcommand to its handler

    :return: Pointer to command function
    """
    return {
        'family': cmd_family,
        'qmin': cmd_qmin,
        'gamma': cmd_gamma,
        'search': cmd_search,
        'verify': cmd_verify,
        'encode': cmd_encode,
        'decode': cmd_decode,
    }


def _number(value: Optional[float]) -> str:
    return 'none' if value is None else '{:.12g}'.format(value)


def _graphs(config: Config) -> list[Graph]:
    graphs = list(graphs_from_config(config))
    if not graphs:
        raise ValueError("No graph given: pass graph6 strings or --input")
    return graphs


# ====================
# COMMANDS
# ====================
def cmd_family(config: Config) -> int:
    member = build(config.family)
    g = member.graph
    domination = domination_number(g)
    try:
        predicted = gamma_formula(member.spec)
    except ValueError:
        predicted = None
    result = q_min(g)
    print("family: {}".format(member.spec.text))
    print("graph6: {}".format(graph6_encode(g)))
    print("n: {}".format(g.order))
    print("m: {}".format(g.size))
    print("girth: {}".format(girth(g) or 'none'))
    print("odd_girth: {}".format(odd_girth(g) or 'none'))
    print("gamma: {}".format(domination.gamma))
    print("gamma_formula: {}".format('none' if predicted is None else predicted))
    print("q_min: {}".format(_number(result.q_min)))
    if predicted is not None and predicted != domination.gamma:
        logger.error("solver gamma %d differs from the closed form %d for %s",
                     domination.gamma, predicted, member.spec.text)
        return EXIT_FAILED
    return EXIT_OK


def cmd_qmin(config: Config) -> int:
    for g in _graphs(config):
        result = q_min(g)
        print("{} q_min={} multiplicity={} residual={:.3g}".format(
            graph6_encode(g), _number(result.q_min), result.multiplicity, result.residual))
        if config.vector:
            print("vector: {}".format(" ".join(_number(v) for v in result.eigenvector.to_list())))
    return EXIT_OK


def cmd_gamma(config: Config) -> int:
    for g in _graphs(config):
        result = domination_number(g, include=config.include, exclude=config.exclude)
        print("{} gamma={} witness={}".format(graph6_encode(g), result.gamma,
                                              ",".join(str(v) for v in result.witness.as_tuple())))
    return EXIT_OK


def search_filter(config: Config, order: int) -> GraphFilter:
    return GraphFilter(order=order, nonbipartite=config.nonbipartite, unicyclic=config.unicyclic,
                       gamma=config.gamma, gamma_min=config.gamma_min, gamma_max=config.gamma_max,
                       girth=config.girth, odd_girth_max=config.odd_girth_max)


def cmd_search(config: Config) -> int:
    stream = None
    order = config.n
    if config.input_file:
        stream = graphs_from_config(config)
        if order is None:
            first = next(stream, None)
            if first is None:
                raise ValueError("'{}' holds no graph after line {}".format(config.input_file, config.offset))
            order = first.order
            stream = chain([first], stream)
    f = search_filter(config, order)
    if config.spool:
        spool_graph6(filter_stream(source_stream(f), f), config.spool)
        stream = read_graph6(config.spool)
    result = scan(f, config.threads, config.progress, collect=config.format == 'graph6', stream=stream)
    report = scan_report('search', f.to_dict(), f, result)
    if report.status == 'empty-domain':
        logger.warning("search: no graph satisfies %s", f.describe())
    return _emit(config, report)


def cmd_verify(config: Config) -> int:
    report = implemented_suites()[config.suite](config)
    return _emit(config, report)


def cmd_encode(config: Config) -> int:
    print(graph6_encode(Graph.from_edges(config.n, config.edges)))
    return EXIT_OK


def cmd_decode(config: Config) -> int:
    for g in _graphs(config):
        print("n={} m={} edges={}".format(g.order, g.size, " ".join("{}-{}".format(u, v) for u, v in g.edges())))
    return EXIT_OK


# ====================
# OUTPUT
# ====================
def summary_lines(report: SearchReport, indent: str = '') -> list[str]:
    """Plain text summary of a report; runtime is left out so repeated runs print the same text"""
    lines = ["{}suite: {}".format(indent, report.suite),
             "{}status: {}".format(indent, report.status),
             "{}domain: {} ({} graphs, {})".format(indent, report.description, report.count, report.scope)]
    if report.qstar is not None:
        lines.append("{}qstar: {}".format(indent, _number(report.qstar)))
        lines.append("{}unique: {}".format(indent, 'yes' if report.unique else 'no'))
    for entry in report.argmin:
        lines.append("{}argmin: {} q={}{}".format(indent, entry.graph6, _number(entry.q),
                                                   " ({})".format(entry.family_match) if entry.family_match else ''))
    for c in report.comparisons:
        lines.append("{}candidate: {} q={} delta={} matches={} in_domain={}".format(
            indent, c.candidate, _number(c.q), _number(c.delta), 'yes' if c.matches else 'no',
            'yes' if c.in_domain else 'no'))
    for b in report.batteries:
        lines.append("{}battery: {} passed={} failed={} skipped={}".format(indent, b.name, b.passed, b.failed,
                                                                          b.skipped))
    for note in report.notes:
        lines.append("{}note: {}".format(indent, note))
    for sub in report.subscans:
        lines.extend(summary_lines(sub, indent + '  '))
    return lines


def _emit(config: Config, report: SearchReport) -> int:
    print("\n".join(summary_lines(report)))
    if config.output_file:
        implemented_exporters()[config.format](report, output_file=config.output_file)
    return EXIT_FAILED if report.status == 'fail' else EXIT_OK
