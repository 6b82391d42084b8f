# -*- coding: utf-8 -*-
#
"""

This file contains the immutable graph structure used by every other module,
its structural predicates, editing and composition operations, and graph6 interchange

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from collections import deque
from typing import Iterable, Iterator, Optional, Union

import networkx as nx

logger = logging.getLogger(__name__)

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid vertex, edge, order or encoding"""


# ====================
# VERTEX SETS
# ====================
class VertexSet(object):
    """Immutable set of vertex indices stored as a bitset"""

    __slots__ = ('_bits',)

    def __init__(self, vertices: Iterable[int] = ()) -> None:
        """
        :param vertices: vertex indices
        :type vertices: iterable(int)

        :raises: TypeError, ValueError
        """
        bits = 0
        for v in vertices:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError("Expected int, got '{}' instead".format(type(v)))
            if v < 0:
                raise ValueError("Vertex index must be non-negative, got {}".format(v))
            bits |= 1 << v
        self._bits = bits

    @classmethod
    def from_bits(cls, bits: int) -> 'VertexSet':
        if not isinstance(bits, int):
            raise TypeError("Expected int, got '{}' instead".format(type(bits)))
        if bits < 0:
            raise ValueError("Bitset must be non-negative")
        vs = cls.__new__(cls)
        vs._bits = bits
        return vs

    @property
    def bits(self) -> int:
        return self._bits

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._bits)

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __bool__(self) -> bool:
        return self._bits != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self._bits >> v & 1)

    def __or__(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet.from_bits(self._bits | _as_bits(other))

    def __and__(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet.from_bits(self._bits & _as_bits(other))

    def __sub__(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet.from_bits(self._bits & ~_as_bits(other))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._bits == other._bits
        if isinstance(other, (set, frozenset)):
            return self._bits == VertexSet(other)._bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(('VertexSet', self._bits))

    def __repr__(self) -> str:
        return "VertexSet({})".format(list(self))

    def issubset(self, other: 'VertexSet') -> bool:
        return self._bits & ~_as_bits(other) == 0

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self)


def _as_bits(other: Union[VertexSet, Iterable[int]]) -> int:
    if isinstance(other, VertexSet):
        return other.bits
    return VertexSet(other).bits


def iter_bits(bits: int) -> Iterator[int]:
    """Yield set bit positions in increasing order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


# ====================
# GRAPH
# ====================
class Graph(object):
    """
    Simple undirected graph on vertices 0..n-1.

    Adjacency is one bitset (python int) per vertex. Instances never change after
    construction, so they are hashable and safe to share between processes.
    """

    __slots__ = ('_adj', '_size')

    def __init__(self, adjacency: Iterable[int]) -> None:
        """
        :param adjacency: neighbour bitset of every vertex
        :type adjacency: iterable(int)

        :raises: TypeError, GraphError
        """
        adj = tuple(adjacency)
        n = len(adj)
        if n > MAX_ORDER:
            raise GraphError("Order {} exceeds the supported bound {}".format(n, MAX_ORDER))
        full = (1 << n) - 1
        degree_sum = 0
        for v, row in enumerate(adj):
            if not isinstance(row, int) or isinstance(row, bool):
                raise TypeError("Expected int, got '{}' instead".format(type(row)))
            if row < 0 or row & ~full:
                raise GraphError("Vertex {} has a neighbour outside 0..{}".format(v, n - 1))
            if row >> v & 1:
                raise GraphError("Vertex {} is adjacent to itself".format(v))
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError("Adjacency is not symmetric between {} and {}".format(v, w))
            degree_sum += row.bit_count()
        self._adj = adj
        self._size = degree_sum // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> 'Graph':
        """
        :param n: order
        :type n: int

        :param edges: vertex pairs
        :type edges: iterable(tuple(int, int))

        :raises: TypeError, GraphError
        """
        if not isinstance(n, int):
            raise TypeError("Expected int, got '{}' instead".format(type(n)))
        if n < 0 or n > MAX_ORDER:
            raise GraphError("Order must be in 0..{}, got {}".format(MAX_ORDER, n))
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise GraphError("Loop at vertex {}".format(u))
            if rows[u] >> v & 1:
                raise GraphError("Duplicate edge {}-{}".format(u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls.from_edges(n, ())

    # --------------------
    # ACCESSORS
    # --------------------
    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return self._size

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << len(self._adj)) - 1

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self.order, v)
        return list(iter_bits(self._adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        _check_vertex(self.order, v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self._adj else 0

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self.order, u)
        _check_vertex(self.order, v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        for u, row in enumerate(self._adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def relabel(self, perm: Iterable[int]) -> 'Graph':
        """
        Graph whose vertex i is old vertex perm[i]

        :raises: GraphError
        """
        perm = tuple(perm)
        n = self.order
        if sorted(perm) != list(range(n)):
            raise GraphError("Not a permutation of 0..{}".format(n - 1))
        inverse = [0] * n
        for i, v in enumerate(perm):
            inverse[v] = i
        rows = []
        for v in perm:
            row = 0
            for w in iter_bits(self._adj[v]):
                row |= 1 << inverse[w]
            rows.append(row)
        return Graph(rows)

    def induced_mask(self, mask: int) -> 'Graph':
        """Subgraph induced on the set bits of mask, relabelled in increasing order"""
        return delete_vertices(self, VertexSet.from_bits(self.full_mask & ~mask))[0]

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.order))
        h.add_edges_from(self.edges())
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> 'Graph':
        nodes = sorted(h.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return "Graph(n={}, m={}, graph6={!r})".format(self.order, self.size, graph6_encode(self))

    def __reduce__(self):
        return (Graph, (self._adj,))


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError("Expected int, got '{}' instead".format(type(v)))
    if v < 0 or v >= n:
        raise GraphError("Vertex {} is not in 0..{}".format(v, n - 1))


# ====================
# CONNECTIVITY
# ====================
def reach(g: Graph, start: int, allowed: Optional[int] = None) -> int:
    """Bitset of vertices reachable from start through vertices of allowed"""
    adj = g.adjacency
    if allowed is None:
        allowed = g.full_mask
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return reach(g, 0) == g.full_mask


def components(g: Graph) -> list[VertexSet]:
    left = g.full_mask
    parts = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(g, start, left)
        parts.append(VertexSet.from_bits(comp))
        left &= ~comp
    return parts


def cut_vertices(g: Graph) -> VertexSet:
    """Vertices whose removal disconnects their component"""
    bits = 0
    for v in g.vertices():
        if g.degree(v) < 2:
            continue
        comp = reach(g, v)
        rest = comp & ~(1 << v)
        first = (rest & -rest).bit_length() - 1
        if reach(g, first, rest) != rest:
            bits |= 1 << v
    return VertexSet.from_bits(bits)


def branches(g: Graph, root: int) -> list[VertexSet]:
    """Vertex sets of the components of g - root that touch root, root excluded"""
    _check_vertex(g.order, root)
    left = reach(g, root) & ~(1 << root)
    parts = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(g, start, left)
        parts.append(VertexSet.from_bits(comp))
        left &= ~comp
    return parts


# ====================
# CYCLES
# ====================
def _bfs_levels(g: Graph, root: int) -> tuple[list[int], list[int]]:
    n = g.order
    dist = [-1] * n
    parent = [-1] * n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.adjacency[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, None for forests"""
    best = None
    for root in g.vertices():
        dist, parent = _bfs_levels(g, root)
        for u, v in g.edges():
            if dist[u] < 0 or parent[u] == v or parent[v] == u:
                continue
            length = dist[u] + dist[v] + 1
            if best is None or length < best:
                best = length
    return best


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, None for bipartite graphs"""
    best = None
    for root in g.vertices():
        dist, _ = _bfs_levels(g, root)
        for u, v in g.edges():
            if dist[u] >= 0 and dist[u] == dist[v]:
                length = 2 * dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


class BipartiteCheck(object):
    """Outcome of a 2-colouring attempt with its witness"""

    __slots__ = ('is_bipartite', 'coloring', 'odd_cycle')

    def __init__(self, is_bipartite: bool, coloring: Optional[tuple[int, ...]] = None,
                 odd_cycle: Optional[tuple[int, ...]] = None) -> None:
        self.is_bipartite = is_bipartite
        self.coloring = coloring
        self.odd_cycle = odd_cycle

    def __bool__(self) -> bool:
        return self.is_bipartite

    def __repr__(self) -> str:
        if self.is_bipartite:
            return "BipartiteCheck(True, coloring={})".format(self.coloring)
        return "BipartiteCheck(False, odd_cycle={})".format(self.odd_cycle)


def is_bipartite(g: Graph) -> BipartiteCheck:
    """
    Exact 2-colouring by BFS.

    The witness is a colouring (0/1 per vertex) or an odd cycle listed in cyclic order.
    """
    n = g.order
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adjacency[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteCheck(False, odd_cycle=_tree_cycle(u, w, parent, depth))
    return BipartiteCheck(True, coloring=tuple(color))


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def is_unicyclic(g: Graph) -> bool:
    return g.order >= 3 and g.size == g.order and is_connected(g)


def unique_cycle(g: Graph) -> tuple[int, ...]:
    """
    Vertices of the only cycle of a unicyclic graph, in cyclic order

    :raises: GraphError
    """
    if not is_unicyclic(g):
        raise GraphError("Graph is not unicyclic")
    degree = g.degrees()
    alive = g.full_mask
    leaves = deque(v for v in g.vertices() if degree[v] == 1)
    while leaves:
        v = leaves.popleft()
        alive &= ~(1 << v)
        for w in iter_bits(g.adjacency[v] & alive):
            degree[w] -= 1
            if degree[w] == 1:
                leaves.append(w)
    start = (alive & -alive).bit_length() - 1
    cycle = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in iter_bits(g.adjacency[cur] & alive) if w != prev]
        step = nxt[0] if prev >= 0 else min(nxt)
        if step == start:
            break
        cycle.append(step)
        prev, cur = cur, step
    return tuple(cycle)


# ====================
# PENDANTS
# ====================
def pendant_vertices(g: Graph) -> VertexSet:
    return VertexSet(v for v in g.vertices() if g.adjacency[v].bit_count() == 1)


def p_dominators(g: Graph) -> VertexSet:
    """Support vertices: neighbours of at least one pendant vertex"""
    bits = 0
    for v in pendant_vertices(g):
        bits |= g.adjacency[v]
    return VertexSet.from_bits(bits)


def pendant_neighbors(g: Graph, v: int) -> VertexSet:
    return VertexSet.from_bits(g.adjacency[v] & pendant_vertices(g).bits)


# ====================
# EDITING AND COMPOSITION
# ====================
def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError("Edge {}-{} is not present".format(u, v))
    rows = list(g.adjacency)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(rows)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError("Loop at vertex {}".format(u))
    if g.has_edge(u, v):
        raise GraphError("Edge {}-{} is already present".format(u, v))
    rows = list(g.adjacency)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(rows)


def delete_vertices(g: Graph, vertices: Union[VertexSet, Iterable[int]]) -> tuple[Graph, dict[int, int]]:
    """
    Remove vertices and relabel the survivors contiguously, keeping their order

    :return: new graph and map old index -> new index for surviving vertices

    :raises: GraphError
    """
    removed = vertices if isinstance(vertices, VertexSet) else VertexSet(vertices)
    for v in removed:
        _check_vertex(g.order, v)
    keep = [v for v in g.vertices() if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adjacency[v] & ~removed.bits):
            row |= 1 << index[w]
        rows.append(row)
    return Graph(rows), index


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.order
    return Graph(list(g1.adjacency) + [row << shift for row in g2.adjacency])


def coalescence(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """
    Identify v1 of g1 with v2 of g2.

    Vertices of g1 keep their indices; the other vertices of g2 follow in their
    original order starting at g1.order.
    """
    _check_vertex(g1.order, v1)
    _check_vertex(g2.order, v2)
    n1 = g1.order
    mapping = {}
    nxt = n1
    for w in g2.vertices():
        if w == v2:
            mapping[w] = v1
        else:
            mapping[w] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges.extend((mapping[a], mapping[b]) for a, b in g2.edges())
    return Graph.from_edges(n1 + g2.order - 1, edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """
    One copy of g2 per vertex of g1; copy i sits at indices n1 + i*n2 .. and is
    joined to every vertex of it from vertex i of g1
    """
    if g1.order == 0:
        raise GraphError("Corona needs a non-empty first graph")
    n1, n2 = g1.order, g2.order
    edges = list(g1.edges())
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + a, base + b) for a, b in g2.edges())
        edges.extend((i, base + w) for w in range(n2))
    return Graph.from_edges(n1 * (1 + n2), edges)


# ====================
# GRAPH6
# ====================
def graph6_encode(g: Graph) -> str:
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


def graph6_decode(text: str) -> Graph:
    """
    :raises: TypeError, GraphError
    """
    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    if not isinstance(text, str):
        raise TypeError("Expected str, got '{}' instead".format(type(text)))
    data = text.strip()
    if data.startswith('>>graph6<<'):
        data = data[len('>>graph6<<'):]
    if not data or any(ord(c) < 63 or ord(c) > 126 for c in data):
        raise GraphError("Malformed graph6 string {!r}".format(text))
    try:
        h = nx.from_graph6_bytes(data.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise GraphError("Malformed graph6 string {!r}: {}".format(text, e)) from e
    if h.number_of_nodes() > MAX_ORDER:
        raise GraphError("Order {} exceeds the supported bound {}".format(h.number_of_nodes(), MAX_ORDER))
    return Graph.from_edges(h.number_of_nodes(), h.edges())
