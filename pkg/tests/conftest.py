# -*- coding: utf-8 -*-
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import networkx as nx
import pytest

from specgraph.libs.config import TOLERANCE_ENV, Config
from specgraph.libs.graph import Graph


@pytest.fixture(autouse=True)
def default_tolerances(monkeypatch):
    monkeypatch.delenv(TOLERANCE_ENV, raising=False)
    Config.set_overrides({})
    yield
    Config.set_overrides({})


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def atlas_connected(n: int) -> list[nx.Graph]:
    """Connected graphs of order n from the networkx atlas (n <= 7)"""
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
