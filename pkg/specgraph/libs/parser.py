# -*- coding: utf-8 -*-
#
"""

This file reads graphs from the command line or from graph6 files, and spools graph streams
to disk so a long filter run can be resumed at a line offset

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
import os
import tempfile
from itertools import islice
from typing import Callable, Iterable, Iterator

from .config import Config
from .graph import Graph, GraphError, graph6_decode, graph6_encode

logger = logging.getLogger(__name__)


def parsers() -> dict[str, Callable]:
    """
    Enum-like instance containing references to correct parser function

    > parsers()[key](config)

    :return: Pointer to parser function
    """
    return {
        'arguments': graphs_from_arguments,
        'file': graphs_from_file,
    }


def graphs_from_config(config: Config) -> Iterator[Graph]:
    """Graphs named by the configuration: the input file when set, else the graph6 arguments"""
    if not isinstance(config, Config):
        raise TypeError("Expected Config, got '{}' instead".format(type(config)))
    return parsers()['file' if config.input_file else 'arguments'](config)


def graphs_from_arguments(config: Config) -> Iterator[Graph]:
    """
    :raises: TypeError, GraphError
    """
    if not isinstance(config, Config):
        raise TypeError("Expected Config, got '{}' instead".format(type(config)))
    for text in config.graph6:
        yield graph6_decode(text)


def graphs_from_file(config: Config) -> Iterator[Graph]:
    """
    :raises: TypeError, GraphError, FileNotFoundError
    """
    if not isinstance(config, Config):
        raise TypeError("Expected Config, got '{}' instead".format(type(config)))
    return read_graph6(config.input_file, config.offset)


def read_graph6(path: str, start: int = 0) -> Iterator[Graph]:
    """
    One graph per non-blank line, beginning at line offset start.
    An optional '>>graph6<<' header is skipped.

    :param path: graph6 file
    :type path: str

    :param start: number of lines to skip
    :type start: int

    :raises: TypeError, ValueError, GraphError, FileNotFoundError
    """
    if not isinstance(path, str):
        raise TypeError("Expected str, got '{}' instead".format(type(path)))
    if not isinstance(start, int) or isinstance(start, bool):
        raise TypeError("Expected int, got '{}' instead".format(type(start)))
    if start < 0:
        raise ValueError("start must be non-negative, got {}".format(start))
    if not os.path.isfile(path):
        raise FileNotFoundError("Could Not find '{}'.".format(path))

    def lines() -> Iterator[Graph]:
        with open(path, 'r') as f:
            for number, line in enumerate(islice(f, start, None), start + 1):
                text = line.strip()
                if text.startswith('>>graph6<<'):
                    text = text[len('>>graph6<<'):]
                if not text:
                    continue
                try:
                    yield graph6_decode(text)
                except GraphError as e:
                    raise GraphError("{}:{}: {}".format(path, number, e)) from e
    logger.debug("reading %s from line %d", path, start)
    return lines()


def spool_graph6(stream: Iterable[Graph], path: str) -> int:
    """
    Writes one graph6 line per graph, replacing path atomically once the stream is exhausted.

    :return: number of graphs written
    :raises: TypeError
    """
    if not isinstance(path, str):
        raise TypeError("Expected str, got '{}' instead".format(type(path)))
    if not path:
        raise ValueError("path must have a valid name.")
    count = 0
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix='.spool-', dir=folder)
    try:
        with os.fdopen(fd, 'w') as f:
            for g in stream:
                if not isinstance(g, Graph):
                    raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
                f.write(graph6_encode(g) + '\n')
                count += 1
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("spooled %d graphs to %s", count, path)
    return count
