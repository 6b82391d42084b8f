# -*- coding: utf-8 -*-
#
"""

This file contains the run configuration, its YAML variant and the numeric tolerances

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
import os
from typing import Optional

from yaml import load
from yaml.loader import SafeLoader

logger = logging.getLogger(__name__)

TOLERANCE_FLOOR = 1e-14
TOLERANCE_ENV = 'SPECGRAPH_TOLERANCE'


class Config(object):

    _overrides: dict[str, float] = {}

    def __init__(self, command: str, family: Optional[str] = None, graph6: Optional[list[str]] = None,
                 input_file: Optional[str] = None, offset: int = 0, n: Optional[int] = None,
                 gamma: Optional[int] = None, gamma_min: Optional[int] = None, gamma_max: Optional[int] = None,
                 girth: Optional[int] = None, odd_girth_max: Optional[int] = None, nonbipartite: bool = False,
                 unicyclic: bool = False, suite: Optional[str] = None, threads: Optional[int] = None,
                 output_file: Optional[str] = None, format: str = "json",
                 tolerances: Optional[dict[str, float]] = None, include: Optional[list[int]] = None,
                 exclude: Optional[list[int]] = None, vector: bool = False, progress: bool = True,
                 batteries: Optional[dict[str, int]] = None, spool: Optional[str] = None,
                 edges: Optional[list[tuple[int, int]]] = None) -> None:
        """
        :param command: subcommand (family, qmin, gamma, search, verify, encode, decode)
        :type command: str

        :param family: family specification text, e.g. "scriptH n=9 alpha=3"
        :type family: str

        :param graph6: graph6 strings given on the command line
        :type graph6: list(str)

        :param input_file: file with one graph6 string per line
        :type input_file: str

        :param offset: first line of input_file to read
        :type offset: int

        :param n: order
        :type n: int

        :param gamma: exact domination number filter or suite parameter
        :type gamma: int

        :param threads: worker processes, None for all available cores
        :type threads: int

        :param output_file: report path, None for no report file
        :type output_file: str

        :param format: report format (json, csv, graph6, xlsx)
        :type format: str

        :param tolerances: overrides of Config.tolerances()
        :type tolerances: dict(str, float)

        :param batteries: overrides of Config.battery_limits()
        :type batteries: dict(str, int)

        :param spool: graph6 file the search domain is written to before it is scanned
        :type spool: str

        :param edges: edge list of the graph to encode, on vertices 0..n-1
        :type edges: list(tuple(int, int))

        :raises: TypeError, ValueError
        """
        if not isinstance(command, str):
            raise TypeError("Expected str, got '{}' instead".format(type(command)))
        if command not in Config.commands():
            raise ValueError("Unknown command '{}', expected one of: {}".format(command, ", ".join(Config.commands())))
        if family is not None and not isinstance(family, str):
            raise TypeError("Expected str, got '{}' instead".format(type(family)))
        if graph6 is not None:
            if not isinstance(graph6, list):
                raise TypeError("Expected list, got '{}' instead".format(type(graph6)))
            for text in graph6:
                if not isinstance(text, str):
                    raise TypeError("Expected str, got '{}' instead".format(type(text)))
        if input_file is not None and not isinstance(input_file, str):
            raise TypeError("Expected str, got '{}' instead".format(type(input_file)))
        if output_file is not None and not isinstance(output_file, str):
            raise TypeError("Expected str, got '{}' instead".format(type(output_file)))
        if not isinstance(format, str):
            raise TypeError("Expected str, got '{}' instead".format(type(format)))
        if format not in Config.formats():
            raise ValueError("Invalid value for format parameter, must be one of: {}".format(", ".join(Config.formats())))
        for name, value in (('offset', offset), ('n', n), ('gamma', gamma), ('gamma_min', gamma_min),
                            ('gamma_max', gamma_max), ('girth', girth), ('odd_girth_max', odd_girth_max),
                            ('threads', threads)):
            if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
                raise TypeError("Expected int for {}, got '{}' instead".format(name, type(value)))
        if offset < 0:
            raise ValueError("offset must be non-negative, got {}".format(offset))
        if threads is not None and threads < 1:
            raise ValueError("threads must be at least 1, got {}".format(threads))
        if n is not None and n < 1:
            raise ValueError("n must be at least 1, got {}".format(n))
        if suite is not None:
            if not isinstance(suite, str):
                raise TypeError("Expected str, got '{}' instead".format(type(suite)))
            suite = Config.suite_aliases().get(suite, suite)
            if suite not in Config.suites():
                raise ValueError("Unknown suite '{}', expected one of: {}".format(suite, ", ".join(Config.suites())))
        if command == 'verify' and suite is None:
            raise ValueError("verify needs a suite name")
        if command == 'family' and family is None:
            raise ValueError("family needs a specification text")
        if command == 'search' and n is None and input_file is None:
            raise ValueError("search needs --n or --input")
        if command == 'encode' and n is None:
            raise ValueError("encode needs --n")
        if spool is not None and not isinstance(spool, str):
            raise TypeError("Expected str, got '{}' instead".format(type(spool)))
        if spool is not None and input_file is not None:
            raise ValueError("--spool and --input cannot be combined")

        self.command = command
        self.family = family
        self.graph6 = graph6 or []
        self.input_file = input_file
        self.offset = offset
        self.n = n
        self.gamma = gamma
        self.gamma_min = gamma_min
        self.gamma_max = gamma_max
        self.girth = girth
        self.odd_girth_max = odd_girth_max
        self.nonbipartite = bool(nonbipartite)
        self.unicyclic = bool(unicyclic)
        self.suite = suite
        self.threads = threads if threads is not None else (os.cpu_count() or 1)
        self.format = format
        self.output_file = None
        if output_file is not None:
            self.output_file = "{}.{}".format(output_file, format) if output_file.split(".")[-1] != format \
                else output_file
        self.tolerances = Config.check_tolerances(tolerances or {})
        self.include = list(include or [])
        self.exclude = list(exclude or [])
        self.vector = bool(vector)
        self.progress = bool(progress)
        self.batteries = Config.check_batteries(batteries or {})
        self.spool = spool
        self.edges = list(edges or [])

    @staticmethod
    def commands() -> list[str]:
        return ['family', 'qmin', 'gamma', 'search', 'verify', 'encode', 'decode']

    @staticmethod
    def formats() -> list[str]:
        return ['json', 'csv', 'graph6', 'xlsx']

    @staticmethod
    def suites() -> list[str]:
        return ['near-half', 'odd-girth', 'unicyclic-near-half', 'low-domination', 'f-structure', 'preliminaries']

    @staticmethod
    def suite_aliases() -> dict[str, str]:
        return {
            'theorem-1.1':     'near-half',
            'theorem-1.2':     'odd-girth',
            'theorem-4.4-4.7': 'unicyclic-near-half',
            'lemma-2.11':      'low-domination',
            'theorem-3.2':     'f-structure',
        }

    @staticmethod
    def tolerances() -> dict[str, float]:
        return {
            'eigen':       1e-10,
            'residual':    1e-8,
            'psd':         1e-10,
            'cluster':     1e-8,
            'zero':        1e-8,
            'strict':      1e-9,
            'interlacing': 1e-8,
            'bipartite':   1e-9,
            'tie':         1e-9,
            'relocation':  1e-10,
            'mindeg':      1e-8,
        }

    @staticmethod
    def battery_limits() -> dict[str, int]:
        return {
            'bipartite_law':   8,
            'mindeg':          8,
            'interlacing':     7,
            'witness':         7,
            'pendants':        8,
            'corona':          8,
            'ore':             8,
            'path_cycle':      30,
            'cycle_spectra':   30,
            'sunlike':         13,
            'comb':            20,
            'packed':          14,
            'h_relations':     12,
            'random_sunlike':  200,
            'structure':       9,
            'random_families': 200,
            'relocation':      5,
            'seed':            20240601,
        }

    @staticmethod
    def check_tolerances(values: dict[str, float]) -> dict[str, float]:
        if not isinstance(values, dict):
            raise TypeError("Expected dict, got '{}' instead".format(type(values)))
        checked = {}
        for key, value in values.items():
            if key not in Config.tolerances():
                raise ValueError("Unknown tolerance '{}', expected one of: {}".format(
                    key, ", ".join(Config.tolerances())))
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise TypeError("Expected float for tolerance '{}', got '{}' instead".format(key, type(value)))
            if value < TOLERANCE_FLOOR:
                raise ValueError("Tolerance '{}' must be at least {}, got {}".format(key, TOLERANCE_FLOOR, value))
            checked[key] = float(value)
        return checked

    @staticmethod
    def check_batteries(values: dict[str, int]) -> dict[str, int]:
        if not isinstance(values, dict):
            raise TypeError("Expected dict, got '{}' instead".format(type(values)))
        for key, value in values.items():
            if key not in Config.battery_limits():
                raise ValueError("Unknown battery '{}', expected one of: {}".format(
                    key, ", ".join(Config.battery_limits())))
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError("Battery '{}' needs a non-negative int, got {!r}".format(key, value))
        return dict(values)

    # --------------------
    # ACTIVE TOLERANCES
    # --------------------
    @staticmethod
    def tolerance(name: str) -> float:
        """Active value of one tolerance: override, then environment (eigen only), then default"""
        if name in Config._overrides:
            return Config._overrides[name]
        value = Config.tolerances()[name]
        if name == 'eigen':
            env = os.environ.get(TOLERANCE_ENV)
            if env:
                try:
                    parsed = float(env)
                except ValueError:
                    raise ValueError("{} must be a number, got '{}'".format(TOLERANCE_ENV, env)) from None
                if parsed < TOLERANCE_FLOOR:
                    raise ValueError("{} must be at least {}, got {}".format(TOLERANCE_ENV, TOLERANCE_FLOOR, parsed))
                value = parsed
        return value

    @staticmethod
    def active_tolerances() -> dict[str, float]:
        return {name: Config.tolerance(name) for name in Config.tolerances()}

    @staticmethod
    def overrides() -> dict[str, float]:
        return dict(Config._overrides)

    @staticmethod
    def set_overrides(values: dict[str, float]) -> None:
        Config._overrides = Config.check_tolerances(values)
        if values:
            logger.info("tolerance overrides: %s", Config._overrides)


class Config_YAML(Config):
    def __init__(self, command: str, config_file: str, **options) -> None:
        """
        Same options as Config, with defaults taken from a .yml file; explicit
        keyword options win over the file.

        :param config_file: path to the .yml file
        :type config_file: str

        :raises: TypeError, ValueError, FileNotFoundError
        """
        if not isinstance(config_file, str):
            raise TypeError("Expected str, got '{}' instead".format(type(config_file)))

        # loads configuration .yml file as a dict
        try:
            with open(config_file, 'r') as f:
                yamldict = load(f, Loader=SafeLoader) or {}
        except FileNotFoundError:
            raise FileNotFoundError("Could Not find '{}'.".format(config_file))
        if not isinstance(yamldict, dict):
            raise ValueError("Expected a mapping at the top of '{}'".format(config_file))

        known = {'format', 'threads', 'output', 'tolerances', 'batteries', 'progress'}
        for key in yamldict:
            if key not in known:
                raise ValueError("Unknown key '{}' in '{}', expected one of: {}".format(
                    key, config_file, ", ".join(sorted(known))))

        if 'format' in yamldict and options.get('format') is None:
            options['format'] = yamldict['format']
        if 'threads' in yamldict and options.get('threads') is None:
            options['threads'] = yamldict['threads']
        if 'output' in yamldict and options.get('output_file') is None:
            options['output_file'] = yamldict['output']
        if 'progress' in yamldict:
            options['progress'] = bool(yamldict['progress']) and options.get('progress', True)
        tolerances = dict(yamldict.get('tolerances') or {})
        tolerances.update(options.get('tolerances') or {})
        options['tolerances'] = tolerances
        batteries = dict(yamldict.get('batteries') or {})
        batteries.update(options.get('batteries') or {})
        options['batteries'] = batteries
        if options.get('format') is None:
            options['format'] = 'json'

        # call parent class
        Config.__init__(self, command, **options)
        self.config_file = config_file
