# -*- coding: utf-8 -*-
#
"""

This file computes canonical labelings by partition refinement and individualisation
with automorphism pruning.

Orders up to MAX_CANONICAL_ORDER are accepted. Certificates are the upper triangle of
the relabelled adjacency matrix read row by row; the largest certificate over the
search tree wins.

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, graph6_encode

logger = logging.getLogger(__name__)

MAX_CANONICAL_ORDER = 24
MAX_GENERATORS = 64


@dataclass(frozen=True, order=True)
class CanonicalForm(object):
    """Isomorphism-invariant encoding: equal forms iff isomorphic graphs"""

    order: int
    bits: int

    def graph(self) -> Graph:
        n = self.order
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = []
        total = len(pairs)
        for k, (i, j) in enumerate(pairs):
            if self.bits >> (total - 1 - k) & 1:
                edges.append((i, j))
        return Graph.from_edges(n, edges)

    @property
    def text(self) -> str:
        """graph6 string of the canonical representative"""
        return graph6_encode(self.graph())

    def __str__(self) -> str:
        return self.text


class _Search(object):

    def __init__(self, g: Graph) -> None:
        self.adj = g.adjacency
        self.n = g.order
        self.path: list[int] = []
        self.first_perm: Optional[tuple[int, ...]] = None
        self.first_cert = -1
        self.first_path: list[int] = []
        self.best_perm: Optional[tuple[int, ...]] = None
        self.best_cert = -1
        self.best_path: list[int] = []
        self.automorphisms: list[tuple[int, ...]] = []

    # --------------------
    # REFINEMENT
    # --------------------
    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        """Coarsest equitable partition finer than cells; split order depends on counts only"""
        adj = self.adj
        while True:
            masks = []
            for cell in cells:
                m = 0
                for v in cell:
                    m |= 1 << v
                masks.append(m)
            out = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                keyed: dict[tuple[int, ...], list[int]] = {}
                for v in cell:
                    row = adj[v]
                    key = tuple((row & m).bit_count() for m in masks)
                    keyed.setdefault(key, []).append(v)
                if len(keyed) == 1:
                    out.append(cell)
                    continue
                changed = True
                for key in sorted(keyed):
                    out.append(keyed[key])
            cells = out
            if not changed:
                return cells

    def certificate(self, perm: tuple[int, ...]) -> int:
        adj = self.adj
        cert = 0
        n = self.n
        for i in range(n):
            row = adj[perm[i]]
            for j in range(i + 1, n):
                cert = cert << 1 | (row >> perm[j] & 1)
        return cert

    # --------------------
    # AUTOMORPHISMS
    # --------------------
    def add_automorphism(self, source: tuple[int, ...], target: tuple[int, ...]) -> None:
        if len(self.automorphisms) >= MAX_GENERATORS:
            return
        aut = [0] * self.n
        for a, b in zip(source, target):
            aut[a] = b
        self.automorphisms.append(tuple(aut))

    def same_orbit(self, v: int, explored: list[int]) -> bool:
        fixed = self.path
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for aut in self.automorphisms:
            if any(aut[p] != p for p in fixed):
                continue
            for a in range(self.n):
                ra, rb = find(a), find(aut[a])
                if ra != rb:
                    parent[ra] = rb
        root = find(v)
        return any(find(u) == root for u in explored)

    def divergence(self, other: list[int]) -> int:
        for d, (a, b) in enumerate(zip(self.path, other)):
            if a != b:
                return d
        return min(len(self.path), len(other))

    # --------------------
    # SEARCH TREE
    # --------------------
    def leaf(self, cells: list[list[int]]) -> Optional[int]:
        perm = tuple(cell[0] for cell in cells)
        cert = self.certificate(perm)
        if self.first_perm is None:
            self.first_perm = self.best_perm = perm
            self.first_cert = self.best_cert = cert
            self.first_path = list(self.path)
            self.best_path = list(self.path)
            return None
        if cert == self.first_cert:
            self.add_automorphism(self.first_perm, perm)
            return self.divergence(self.first_path)
        if cert > self.best_cert:
            self.best_perm = perm
            self.best_cert = cert
            self.best_path = list(self.path)
            return None
        if cert == self.best_cert:
            self.add_automorphism(self.best_perm, perm)
            return self.divergence(self.best_path)
        return None

    def explore(self, cells: list[list[int]], depth: int) -> Optional[int]:
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target < 0 or len(cell) < len(cells[target])):
                target = i
        if target < 0:
            return self.leaf(cells)
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored and self.same_orbit(v, explored):
                continue
            explored.append(v)
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            self.path.append(v)
            jump = self.explore(self.refine(split), depth + 1)
            self.path.pop()
            if jump is not None and jump < depth:
                return jump
        return None

    def run(self) -> tuple[int, ...]:
        self.explore(self.refine([list(range(self.n))]), 0)
        assert self.best_perm is not None
        return self.best_perm


def _check(g: Graph) -> None:
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    if g.order > MAX_CANONICAL_ORDER:
        raise GraphError("Canonical forms are limited to order {}, got {}".format(MAX_CANONICAL_ORDER, g.order))


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """
    Canonical order of the vertices: position i holds the vertex placed at i.

    :param g: graph
    :type g: Graph

    :raises: TypeError, GraphError
    """
    _check(g)
    if g.order == 0:
        return ()
    return _Search(g).run()


def canonical_form(g: Graph) -> CanonicalForm:
    """
    :param g: graph
    :type g: Graph

    :return: isomorphism-invariant form of g

    :raises: TypeError, GraphError
    """
    _check(g)
    if g.order == 0:
        return CanonicalForm(0, 0)
    search = _Search(g)
    search.run()
    return CanonicalForm(g.order, search.best_cert)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def canonical_labeling_and_form(g: Graph) -> tuple[tuple[int, ...], CanonicalForm]:
    """Both results of one search"""
    _check(g)
    if g.order == 0:
        return (), CanonicalForm(0, 0)
    search = _Search(g)
    perm = search.run()
    return perm, CanonicalForm(g.order, search.best_cert)
