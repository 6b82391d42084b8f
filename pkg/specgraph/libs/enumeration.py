# -*- coding: utf-8 -*-
#
"""

This file contains the isomorph-free graph streams (connected graphs by canonical
augmentation, unicyclic graphs from rooted trees hung on a cycle), the stream filter
and the spanning unicyclic witness search

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

from .canonical import CanonicalForm, canonical_form, canonical_labeling_and_form
from .domination import domination_number, gamma, ore_bound
from .graph import (Graph, cut_vertices, delete_vertices, girth, is_bipartite, is_connected, is_unicyclic,
                    iter_bits, odd_girth)

logger = logging.getLogger(__name__)

MAX_CONNECTED_ORDER = 10
MIN_UNICYCLIC_ORDER = 3
MAX_UNICYCLIC_ORDER = 13


class WitnessNotFoundError(RuntimeError):
    """No spanning unicyclic subgraph keeps the odd girth and the domination number"""


# ====================
# CONNECTED GRAPHS
# ====================
def _check_order(n: int, low: int, high: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("Expected int, got '{}' instead".format(type(n)))
    if not low <= n <= high:
        raise ValueError("Order must be in {}..{}, got {}".format(low, high, n))


def _candidate_key(g: Graph, v: int) -> tuple:
    degrees = g.degrees()
    return degrees[v], tuple(sorted(degrees[w] for w in iter_bits(g.adjacency[v])))


def _accept(child: Graph, parent_form: CanonicalForm) -> Optional[CanonicalForm]:
    """Canonical form of child when the new last vertex is its canonical deletion, else None"""
    x = child.order - 1
    cuts = cut_vertices(child)
    keys = {v: _candidate_key(child, v) for v in child.vertices() if v not in cuts}
    if x not in keys:
        return None
    best = min(keys.values())
    if keys[x] != best:
        return None
    candidates = [v for v, key in keys.items() if key == best]
    labeling, form = canonical_labeling_and_form(child)
    if len(candidates) == 1:
        return form
    w = next(v for v in labeling if v in candidates)
    if w == x or canonical_form(delete_vertices(child, [w])[0]) == parent_form:
        return form
    return None


def _children(parent: Graph) -> Iterator[Graph]:
    n = parent.order
    parent_form = canonical_form(parent)
    seen: set[CanonicalForm] = set()
    rows = list(parent.adjacency)
    for subset in range(1, 1 << n):
        child_rows = [row | ((subset >> v & 1) << n) for v, row in enumerate(rows)] + [subset]
        child = Graph(child_rows)
        form = _accept(child, parent_form)
        if form is None or form in seen:
            continue
        seen.add(form)
        yield child


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    return tuple(connected_graphs_partition(n, 0, 1))


def connected_graphs_partition(n: int, part: int, parts: int) -> Iterator[Graph]:
    """
    Connected graphs of order n grown from the parents whose index is part modulo parts

    :raises: TypeError, ValueError
    """
    _check_order(n, 1, MAX_CONNECTED_ORDER)
    if not 0 <= part < parts:
        raise ValueError("part must satisfy 0 <= part < parts, got {} of {}".format(part, parts))
    if n == 1:
        if part == 0:
            yield Graph.empty(1)
        return
    for index, parent in enumerate(_classes(n - 1)):
        if index % parts != part:
            continue
        logger.debug("n=%d parent %d", n, index)
        yield from _children(parent)


def connected_graphs(n: int) -> Iterator[Graph]:
    """
    One connected graph per isomorphism class of order n, 1 <= n <= 10

    :raises: TypeError, ValueError
    """
    _check_order(n, 1, MAX_CONNECTED_ORDER)
    if n < MAX_CONNECTED_ORDER:
        return iter(_classes(n))
    return connected_graphs_partition(n, 0, 1)


# ====================
# UNICYCLIC GRAPHS
# ====================
RootedTree = tuple


@lru_cache(maxsize=None)
def _tree_size(tree: RootedTree) -> int:
    return 1 + sum(_tree_size(child) for child in tree)


def _key(tree: RootedTree) -> tuple[int, RootedTree]:
    return _tree_size(tree), tree


def _forests(total: int, bound: Optional[tuple[int, RootedTree]]) -> Iterator[tuple[RootedTree, ...]]:
    """Multisets of rooted trees of the given total size, keys non-increasing and at most bound"""
    if total == 0:
        yield ()
        return
    top = total if bound is None else min(total, bound[0])
    for size in range(top, 0, -1):
        for tree in reversed(rooted_trees(size)):
            key = (size, tree)
            if bound is not None and key > bound:
                continue
            for rest in _forests(total - size, key):
                yield (tree,) + rest


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[RootedTree, ...]:
    """Rooted trees with size vertices as nested tuples of child subtrees, sorted"""
    if size < 1:
        raise ValueError("Rooted tree needs at least one vertex, got {}".format(size))
    if size == 1:
        return ((),)
    return tuple(sorted(_forests(size - 1, None)))


def _dihedral_minimal(keys: tuple) -> bool:
    g = len(keys)
    for shift in range(g):
        rotated = keys[shift:] + keys[:shift]
        if rotated < keys or rotated[::-1] < keys:
            return False
    return True


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _hang(g: int, trees: tuple[RootedTree, ...]) -> Graph:
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for root, tree in enumerate(trees):
        stack = [(root, tree)]
        while stack:
            v, node = stack.pop()
            for child in node:
                edges.append((v, nxt))
                stack.append((nxt, child))
                nxt += 1
    return Graph.from_edges(nxt, edges)


def _unicyclic_sequences(n: int, lengths: Iterable[int]) -> Iterator[tuple[int, tuple[RootedTree, ...]]]:
    for g in lengths:
        for sizes in _compositions(n, g):
            for trees in product(*(rooted_trees(size) for size in sizes)):
                keys = tuple(_key(tree) for tree in trees)
                if _dihedral_minimal(keys):
                    yield g, trees


def _check_lengths(n: int, cycle_lengths: Optional[Iterable[int]]) -> list[int]:
    if cycle_lengths is None:
        return list(range(3, n + 1))
    lengths = sorted(set(cycle_lengths))
    for g in lengths:
        if not isinstance(g, int) or isinstance(g, bool):
            raise TypeError("Expected int, got '{}' instead".format(type(g)))
        if not 3 <= g <= n:
            raise ValueError("Cycle length must be in 3..{}, got {}".format(n, g))
    return lengths


def unicyclic_partition(n: int, cycle_lengths: Optional[Iterable[int]], part: int, parts: int,
                        check_unique: bool = True) -> Iterator[Graph]:
    """
    Unicyclic graphs of order n whose generation index is part modulo parts

    :raises: TypeError, ValueError
    """
    _check_order(n, MIN_UNICYCLIC_ORDER, MAX_UNICYCLIC_ORDER)
    if not 0 <= part < parts:
        raise ValueError("part must satisfy 0 <= part < parts, got {} of {}".format(part, parts))
    lengths = _check_lengths(n, cycle_lengths)
    seen: set[CanonicalForm] = set()
    for index, (g, trees) in enumerate(_unicyclic_sequences(n, lengths)):
        if index % parts != part:
            continue
        graph = _hang(g, trees)
        if check_unique:
            form = canonical_form(graph)
            if form in seen:
                logger.warning("duplicate unicyclic class %s skipped", form.text)
                continue
            seen.add(form)
        yield graph


def unicyclic_graphs(n: int, cycle_lengths: Optional[Iterable[int]] = None, check_unique: bool = True
                     ) -> Iterator[Graph]:
    """
    One unicyclic graph per isomorphism class of order n, 3 <= n <= 13; the cycle
    is 0..g-1 and the hanging trees follow

    :param cycle_lengths: allowed cycle lengths, all when None
    :type cycle_lengths: iterable(int)

    :raises: TypeError, ValueError
    """
    return unicyclic_partition(n, cycle_lengths, 0, 1, check_unique)


def odd_lengths(n: int, girth: Optional[int] = None) -> list[int]:
    if girth is None:
        return list(range(3, n + 1, 2))
    if girth % 2 == 0 or not 3 <= girth <= n:
        raise ValueError("Odd girth must be odd and in 3..{}, got {}".format(n, girth))
    return [girth]


def unicyclic_nonbipartite(n: int, girth: Optional[int] = None) -> Iterator[Graph]:
    """
    Unicyclic graphs of order n whose cycle is odd (of length girth when given)

    :raises: TypeError, ValueError
    """
    _check_order(n, MIN_UNICYCLIC_ORDER, MAX_UNICYCLIC_ORDER)
    return unicyclic_graphs(n, odd_lengths(n, girth))


# ====================
# SPANNING WITNESS
# ====================
def shortest_odd_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Shortest odd cycles of g found from every BFS root, each listed once in cyclic order"""
    length = odd_girth(g)
    if length is None:
        return []
    half = length // 2
    found: dict[frozenset, tuple[int, ...]] = {}
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adjacency[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
        for u, v in g.edges():
            if dist.get(u) != half or dist.get(v) != half:
                continue
            left, right = [u], [v]
            while left[-1] != root:
                left.append(parent[left[-1]])
            while right[-1] != root:
                right.append(parent[right[-1]])
            if set(left[:-1]) & set(right[:-1]):
                continue
            ring = tuple(left[::-1] + right[:-1])
            edges = frozenset(frozenset((ring[i], ring[(i + 1) % length])) for i in range(length))
            found.setdefault(edges, ring)
    return [found[key] for key in sorted(found, key=lambda e: found[e])]


class _UnionFind(object):

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _ring_edges(ring: tuple[int, ...]) -> list[tuple[int, int]]:
    return [tuple(sorted((ring[i], ring[(i + 1) % len(ring)]))) for i in range(len(ring))]


def _seeded(g: Graph, ring: tuple[int, ...]) -> _UnionFind:
    uf = _UnionFind(g.order)
    for a in ring[1:]:
        uf.union(ring[0], a)
    return uf


def _greedy_witness(g: Graph, ring: tuple[int, ...], target: int) -> Optional[Graph]:
    cycle = _ring_edges(ring)
    uf = _seeded(g, ring)
    chosen = list(cycle)
    dominators = domination_number(g).witness
    preferred = []
    for v in g.vertices():
        if v in dominators:
            continue
        hosts = [d for d in iter_bits(g.adjacency[v]) if d in dominators]
        if hosts:
            preferred.append(tuple(sorted((v, hosts[0]))))
    for u, v in preferred + list(g.edges()):
        if (u, v) not in chosen and uf.union(u, v):
            chosen.append((u, v))
    h = Graph.from_edges(g.order, chosen)
    if is_unicyclic(h) and gamma(h) == target:
        return h
    return None


def spanning_unicyclic_witness(g: Graph) -> Graph:
    """
    Spanning unicyclic subgraph keeping a shortest odd cycle and the domination number

    :raises: TypeError, ValueError, WitnessNotFoundError
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    if not is_connected(g) or is_bipartite(g):
        raise ValueError("Expected a connected nonbipartite graph")
    if is_unicyclic(g):
        return g
    target = gamma(g)
    rings = shortest_odd_cycles(g)
    for ring in rings:
        h = _greedy_witness(g, ring, target)
        if h is not None:
            return h
    logger.debug("greedy witness failed on %r, searching exhaustively", g)
    for ring in rings:
        cycle = _ring_edges(ring)
        others = [e for e in g.edges() if e not in cycle]
        for extra in combinations(others, g.order - len(ring)):
            uf = _seeded(g, ring)
            if not all(uf.union(u, v) for u, v in extra):
                continue
            h = Graph.from_edges(g.order, cycle + list(extra))
            if gamma(h) == target:
                return h
    raise WitnessNotFoundError("No spanning unicyclic witness for {!r}".format(g))


# ====================
# FILTERS
# ====================
@dataclass(frozen=True)
class GraphFilter(object):
    """Predicates on a stream of connected graphs of one order"""

    order: int
    nonbipartite: bool = False
    unicyclic: bool = False
    gamma: Optional[int] = None
    gamma_min: Optional[int] = None
    gamma_max: Optional[int] = None
    girth: Optional[int] = None
    odd_girth_max: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ('order', 'gamma', 'gamma_min', 'gamma_max', 'girth', 'odd_girth_max'):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
                raise TypeError("Expected int for {}, got '{}' instead".format(name, type(value)))
        if self.order < 1:
            raise ValueError("order must be at least 1, got {}".format(self.order))

    def gamma_bounds(self) -> tuple[int, int]:
        low, high = 1, ore_bound(self.order)
        if self.gamma is not None:
            low, high = max(low, self.gamma), min(high, self.gamma)
        if self.gamma_min is not None:
            low = max(low, self.gamma_min)
        if self.gamma_max is not None:
            high = min(high, self.gamma_max)
        return low, high

    def satisfiable(self) -> bool:
        """False when the constraints leave nothing, including γ above the bound floor(n/2)"""
        low, high = self.gamma_bounds()
        if low > high:
            return False
        if (self.nonbipartite or self.unicyclic) and self.order < 3:
            return False
        if self.girth is not None and not 3 <= self.girth <= self.order:
            return False
        if self.odd_girth_max is not None and self.odd_girth_max < 3:
            return False
        if self.nonbipartite and self.girth is not None and self.unicyclic and self.girth % 2 == 0:
            return False
        return True

    def describe(self) -> str:
        parts = ["connected", "n={}".format(self.order)]
        if self.nonbipartite:
            parts.append("nonbipartite")
        if self.unicyclic:
            parts.append("unicyclic")
        if self.gamma is not None:
            parts.append("gamma={}".format(self.gamma))
        if self.gamma_min is not None:
            parts.append("gamma>={}".format(self.gamma_min))
        if self.gamma_max is not None:
            parts.append("gamma<={}".format(self.gamma_max))
        if self.girth is not None:
            parts.append("girth={}".format(self.girth))
        if self.odd_girth_max is not None:
            parts.append("odd-girth<={}".format(self.odd_girth_max))
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {key: value for key, value in self.__dict__.items() if value not in (None, False)}

    def accepts(self, g: Graph) -> bool:
        if g.order != self.order or not is_connected(g):
            return False
        if self.unicyclic and not is_unicyclic(g):
            return False
        if self.nonbipartite and is_bipartite(g):
            return False
        if self.girth is not None and girth(g) != self.girth:
            return False
        if self.odd_girth_max is not None:
            og = odd_girth(g)
            if og is None or og > self.odd_girth_max:
                return False
        if self.gamma is not None or self.gamma_min is not None or self.gamma_max is not None:
            low, high = self.gamma_bounds()
            if not low <= gamma(g) <= high:
                return False
        return True


def filter_stream(stream: Iterable[Graph], f: GraphFilter) -> Iterator[Graph]:
    """Graphs of stream accepted by f, in stream order; cheap predicates run before γ"""
    if not f.satisfiable():
        logger.warning("filter '%s' cannot be satisfied (gamma <= %d for n=%d)",
                       f.describe(), ore_bound(f.order), f.order)
        return
    for g in stream:
        if f.accepts(g):
            yield g


def source_stream(f: GraphFilter, part: int = 0, parts: int = 1) -> Iterator[Graph]:
    """
    Generator matching the filter: the unicyclic stream when unicyclic is requested,
    connected graphs otherwise

    :raises: ValueError when the order is outside the generator bounds
    """
    if f.unicyclic:
        lengths = None
        if f.nonbipartite:
            lengths = odd_lengths(f.order)
            if f.girth is not None:
                lengths = [g for g in lengths if g == f.girth]
            if f.odd_girth_max is not None:
                lengths = [g for g in lengths if g <= f.odd_girth_max]
        elif f.girth is not None:
            lengths = [f.girth]
        return unicyclic_partition(f.order, lengths, part, parts)
    if parts == 1:
        return connected_graphs(f.order)
    return connected_graphs_partition(f.order, part, parts)


def prepare_partitions(f: GraphFilter) -> None:
    """Build the shared parent list once, before worker processes fork"""
    if not f.unicyclic and 2 <= f.order <= MAX_CONNECTED_ORDER:
        _classes(f.order - 1)
