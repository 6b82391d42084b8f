# -*- coding: utf-8 -*-
#
"""

This file contains the constructors of every named graph family, with the labels
v1, v2, ... used in the family definitions mapped to vertex indices (v1 -> 0)

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Union

from .graph import (Graph, GraphError, VertexSet, corona as corona_product, is_unicyclic, iter_bits,
                    p_dominators, pendant_neighbors, reach, unique_cycle)

logger = logging.getLogger(__name__)


class UnrealizableFamilyError(ValueError):
    """Parameter plan that no graph of the family realizes"""


# ====================
# FAMILY SPECIFICATIONS
# ====================
ParamValue = Union[int, str, tuple]


def _schemas() -> dict[str, tuple[str, ...]]:
    """Parameter names of each variant, in text order"""
    return {
        'path': ('n',),
        'cycle': ('n',),
        'complete': ('n',),
        'lollipop': ('g', 'l'),
        'c3star': ('n', 'k'),
        'fgraph': ('g', 'l', 'attach'),
        'h1': ('eps', 'k', 'a', 's'),
        'h2': ('eps', 'k', 'a', 's'),
        'h3': ('eps', 'k', 'a', 's'),
        'h4': ('eps', 'k', 'a', 's'),
        'h5': ('eps', 'k', 'a', 's'),
        'scriptH': ('n', 'alpha'),
        'sunlike': ('g', 'k'),
        'corona': ('base', 'n'),
    }


def _optional() -> dict[str, ParamValue]:
    return {'attach': (), 'a': (), 's': 1}


def _aliases() -> dict[str, str]:
    return {'α': 'alpha', 'ε': 'eps', 'epsilon': 'eps'}


@dataclass(frozen=True)
class FamilySpec(object):
    """
    A family variant with its parameters.

    Canonical text form: ``<variant> key=value ...``, e.g. ``scriptH n=9 alpha=3``,
    ``fgraph g=5 l=1 attach=1:1,3:1`` or ``h1 eps=7 k=2 a=1,3 s=2``.
    """

    variant: str
    params: tuple[tuple[str, ParamValue], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.variant, str):
            raise TypeError("Expected str, got '{}' instead".format(type(self.variant)))
        if self.variant not in _schemas():
            raise ValueError("Unknown family variant '{}', expected one of: {}".format(
                self.variant, ", ".join(_schemas())))
        schema = _schemas()[self.variant]
        given = dict(self.params)
        for key in given:
            if key not in schema:
                raise ValueError("Parameter '{}' is not valid for variant '{}'".format(key, self.variant))
        for key in schema:
            if key not in given and key not in _optional():
                raise ValueError("Variant '{}' needs parameter '{}'".format(self.variant, key))
        ordered = tuple((key, given[key]) for key in schema if key in given)
        object.__setattr__(self, 'params', ordered)

    @classmethod
    def of(cls, variant: str, **params: ParamValue) -> 'FamilySpec':
        return cls(variant, tuple(params.items()))

    def get(self, key: str, default: Optional[ParamValue] = None) -> ParamValue:
        for k, v in self.params:
            if k == key:
                return v
        if default is None and key in _optional():
            return _optional()[key]
        return default

    @property
    def text(self) -> str:
        parts = [self.variant]
        for key, value in self.params:
            if key == 'attach':
                if value:
                    parts.append("attach=" + ",".join("{}:{}".format(v, c) for v, c in value))
            elif key == 'a':
                if value:
                    parts.append("a=" + ",".join(str(v) for v in value))
            elif key == 's' and value == 1:
                continue
            else:
                parts.append("{}={}".format(key, value))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.text

    @classmethod
    def parse(cls, text: str) -> 'FamilySpec':
        """
        :param text: canonical text form
        :type text: str

        :raises: TypeError, ValueError
        """
        if not isinstance(text, str):
            raise TypeError("Expected str, got '{}' instead".format(type(text)))
        tokens = text.split()
        if not tokens:
            raise ValueError("Empty family specification")
        lookup = {name.lower(): name for name in _schemas()}
        variant = lookup.get(tokens[0].lower())
        if variant is None:
            raise ValueError("Unknown family variant '{}', expected one of: {}".format(
                tokens[0], ", ".join(_schemas())))
        params: dict[str, ParamValue] = {}
        for token in tokens[1:]:
            if '=' not in token:
                raise ValueError("Expected key=value, got '{}' instead".format(token))
            key, raw = token.split('=', 1)
            key = _aliases().get(key, key)
            if key in params:
                raise ValueError("Parameter '{}' given twice".format(key))
            params[key] = _parse_value(key, raw)
        return cls(variant, tuple(params.items()))


def _parse_value(key: str, raw: str) -> ParamValue:
    try:
        if key == 'base':
            if raw not in ('path', 'cycle', 'complete'):
                raise ValueError
            return raw
        if key == 'a':
            return tuple(int(x) for x in raw.split(',') if x)
        if key == 'attach':
            pairs = []
            for item in raw.split(','):
                if not item:
                    continue
                v, c = item.split(':')
                pairs.append((int(v), int(c)))
            return tuple(sorted(pairs))
        return int(raw)
    except ValueError:
        raise ValueError("Invalid value '{}' for parameter '{}'".format(raw, key)) from None


@dataclass(frozen=True)
class FamilyGraph(object):
    """A constructed family member with its vertex-name map"""

    graph: Graph
    spec: FamilySpec
    labels: dict[str, int] = field(default_factory=dict, compare=False)
    flags: dict[str, bool] = field(default_factory=dict, compare=False)

    def vertex(self, name: str) -> int:
        try:
            return self.labels[name]
        except KeyError:
            raise KeyError("No vertex named '{}' in {}".format(name, self.spec.text)) from None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _check_ints(**values: object) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("Expected int for '{}', got '{}' instead".format(name, type(value)))


def _numbered(count: int, prefix: str = 'v') -> dict[str, int]:
    return {"{}{}".format(prefix, i + 1): i for i in range(count)}


# ====================
# BASIC FAMILIES
# ====================
def path(n: int) -> FamilyGraph:
    _check_ints(n=n)
    _require(n >= 1, "path needs n >= 1, got {}".format(n))
    g = Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    return FamilyGraph(g, FamilySpec.of('path', n=n), _numbered(n))


def cycle(n: int) -> FamilyGraph:
    _check_ints(n=n)
    _require(n >= 3, "cycle needs n >= 3, got {}".format(n))
    g = Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    return FamilyGraph(g, FamilySpec.of('cycle', n=n), _numbered(n))


def complete(n: int) -> FamilyGraph:
    _check_ints(n=n)
    _require(n >= 1, "complete needs n >= 1, got {}".format(n))
    g = Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    return FamilyGraph(g, FamilySpec.of('complete', n=n), _numbered(n))


def _cycle_edges(g: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % g) for i in range(g)]


def lollipop(g: int, l: int) -> FamilyGraph:
    """Cycle v1..vg with the path vg..v(g+l) attached at vg"""
    _check_ints(g=g, l=l)
    _require(g >= 3, "lollipop needs g >= 3, got {}".format(g))
    _require(l >= 1, "lollipop needs l >= 1, got {}".format(l))
    edges = _cycle_edges(g) + [(i - 1, i) for i in range(g, g + l)]
    graph = Graph.from_edges(g + l, edges)
    return FamilyGraph(graph, FamilySpec.of('lollipop', g=g, l=l), _numbered(g + l))


def c3_star(n: int, k: int) -> FamilyGraph:
    """
    Triangle v1v2v3, path v3..v(3+k), and n-3-k pendants w1.. at v(3+k)
    (at v3 itself when k = 0)
    """
    _check_ints(n=n, k=k)
    _require(n >= 3, "c3star needs n >= 3, got {}".format(n))
    _require(0 <= k <= n - 3, "c3star needs 0 <= k <= n-3, got k={} n={}".format(k, n))
    end = 2 + k
    edges = _cycle_edges(3) + [(i - 1, i) for i in range(3, end + 1)]
    labels = _numbered(end + 1)
    for j, w in enumerate(range(end + 1, n), 1):
        edges.append((end, w))
        labels['w{}'.format(j)] = w
    return FamilyGraph(Graph.from_edges(n, edges), FamilySpec.of('c3star', n=n, k=k), labels)


# ====================
# PENDANT LOLLIPOPS
# ====================
@dataclass(frozen=True)
class FLayout(object):
    """
    One way of reading a graph as a lollipop with pendants.

    cycle lists v1..vg (vg last), path lists vg..v(g+l).
    """

    cycle: tuple[int, ...]
    path: tuple[int, ...]

    @property
    def girth(self) -> int:
        return len(self.cycle)

    @property
    def tail(self) -> int:
        return len(self.path) - 1

    @property
    def attachment(self) -> int:
        return self.path[0]

    @property
    def end_support(self) -> int:
        """v(g+l-1), the only vertex allowed several pendants"""
        return self.path[-2]


def classify_layout(graph: Graph, layout: FLayout) -> dict[str, bool]:
    """
    Restricted-family flags recomputed from the graph:
    'script' when every p-dominator other than v(g+l-1) has exactly one pendant,
    'circle' when additionally vg is a p-dominator
    """
    supports = p_dominators(graph)
    script = all(len(pendant_neighbors(graph, v)) == 1 for v in supports if v != layout.end_support)
    circle = script and layout.attachment in supports
    return {'script': script, 'circle': circle}


def f_graph(g: int, l: int, attachments: Optional[dict[int, int]] = None) -> FamilyGraph:
    """
    Lollipop L(g, l) with extra pendants.

    :param attachments: label index (1 for v1) -> number of pendants added there;
        keys must be non-pendant lollipop vertices 1..g+l-1
    :type attachments: dict(int, int)

    :raises: TypeError, ValueError
    """
    _check_ints(g=g, l=l)
    _require(g >= 3, "fgraph needs g >= 3, got {}".format(g))
    _require(l >= 1, "fgraph needs l >= 1, got {}".format(l))
    attachments = dict(attachments or {})
    base = lollipop(g, l)
    edges = list(base.graph.edges())
    labels = dict(base.labels)
    nxt = g + l
    for label in sorted(attachments):
        count = attachments[label]
        _check_ints(vertex=label, count=count)
        if label == g + l:
            raise ValueError("v{} is the pendant end of the lollipop and cannot take pendants".format(label))
        _require(1 <= label < g + l, "attachment vertex v{} is not a lollipop vertex".format(label))
        _require(count >= 0, "negative pendant count {} at v{}".format(count, label))
        for j in range(count):
            edges.append((label - 1, nxt))
            labels['p{}_{}'.format(label, j + 1)] = nxt
            nxt += 1
    graph = Graph.from_edges(nxt, edges)
    layout = FLayout(tuple(range(g)), tuple(range(g - 1, g + l)))
    plan = tuple(sorted((v, c) for v, c in attachments.items() if c))
    spec = FamilySpec.of('fgraph', g=g, l=l, attach=plan)
    return FamilyGraph(graph, spec, labels, classify_layout(graph, layout))


def _tree_mask(graph: Graph, root: int, cycle_mask: int) -> int:
    return reach(graph, root, (graph.full_mask & ~cycle_mask) | (1 << root))


def f_layouts(graph: Graph) -> list[FLayout]:
    """Every reading of graph as a lollipop with pendants on non-pendant vertices"""
    if not is_unicyclic(graph):
        return []
    cyc = unique_cycle(graph)
    cycle_mask = sum(1 << c for c in cyc)
    adj = graph.adjacency
    trees = {c: _tree_mask(graph, c, cycle_mask) & ~(1 << c) for c in cyc}

    def is_star(c: int) -> bool:
        return all(adj[w] == 1 << c for w in iter_bits(trees[c]))

    heavy = [c for c in cyc if not is_star(c)]
    if len(heavy) > 1:
        return []
    roots = heavy if heavy else [c for c in cyc if trees[c]]
    layouts = []
    for c0 in roots:
        spine = [c0]
        seen = 1 << c0
        valid = True
        while True:
            cur = spine[-1]
            inner = [w for w in iter_bits(adj[cur] & trees[c0] & ~seen) if adj[w].bit_count() >= 2]
            if len(inner) > 1:
                valid = False
                break
            if not inner:
                break
            spine.append(inner[0])
            seen |= 1 << inner[0]
        if not valid:
            continue
        leaves = [w for w in iter_bits(adj[spine[-1]] & trees[c0]) if adj[w].bit_count() == 1]
        if not leaves:
            continue
        i = cyc.index(c0)
        order = cyc[i + 1:] + cyc[:i + 1]
        layouts.append(FLayout(tuple(order), tuple(spine) + (min(leaves),)))
    return layouts


# ====================
# TRIANGLE WITH A PENDANT PATH
# ====================
def triangle_path_family(variant: str, eps: int, k: int, positions: Optional[tuple[int, ...]] = None,
                         s: int = 1) -> FamilyGraph:
    """
    Triangle v1v2v3 with the path v3..v(eps), k single pendants tau1..tauk and
    s pendants at v(eps-1) (v(eps) is the first of them, omega2..omegas the others).

    h1 puts tau_j at v(a_j) for the given positions a_1 < ... < a_k <= eps-2.
    h2 packs tau_j at v(eps-2-k+j).
    h4 moves tau1 of h2 to v(eps-1); h5 also moves tau2 there.
    h3 moves tau1 of h2 to v(eps-1) and hangs omega2..omegas on v(eps).

    eps = 3 with k = 0 and s = 1 gives the bare triangle.

    :raises: TypeError, ValueError, UnrealizableFamilyError
    """
    if variant not in ('h1', 'h2', 'h3', 'h4', 'h5'):
        raise ValueError("Expected one of h1..h5, got '{}' instead".format(variant))
    _check_ints(eps=eps, k=k, s=s)
    _require(eps >= 3, "eps must be >= 3, got {}".format(eps))
    _require(0 <= k <= eps - 2, "k must satisfy 0 <= k <= eps-2, got k={} eps={}".format(k, eps))
    _require(s >= 1, "s must be >= 1, got {}".format(s))
    positions = tuple(positions) if positions else ()
    if positions:
        _require(len(positions) == k, "expected {} positions, got {}".format(k, len(positions)))
        for a in positions:
            _check_ints(position=a)
        if any(b <= a for a, b in zip(positions, positions[1:])) or positions[0] < 1 or positions[-1] > eps - 2:
            raise UnrealizableFamilyError("positions must satisfy 1 <= a1 < ... < ak <= eps-2, got {}".format(positions))
    spec = FamilySpec.of(variant, eps=eps, k=k, a=positions, s=s)
    if variant == 'h3' and (k < 1 or s < 2):
        raise UnrealizableFamilyError("h3 needs k >= 1 and s >= 2, got k={} s={}".format(k, s))
    if variant == 'h4' and k < 1:
        raise UnrealizableFamilyError("h4 needs k >= 1, got k={}".format(k))
    if variant == 'h5' and k < 2:
        raise UnrealizableFamilyError("h5 needs k >= 2, got k={}".format(k))
    if eps == 3:
        if k != 0 or s != 1:
            raise UnrealizableFamilyError("eps = 3 only admits k = 0 and s = 1")
        return FamilyGraph(cycle(3).graph, spec, _numbered(3))

    labels = _numbered(eps)
    edges = _cycle_edges(3) + [(i - 1, i) for i in range(3, eps)]
    if variant == 'h1':
        hosts = list(positions) if positions else [eps - 2 - k + j for j in range(1, k + 1)]
    else:
        hosts = [eps - 2 - k + j for j in range(1, k + 1)]
    if variant in ('h3', 'h4', 'h5'):
        hosts[0] = eps - 1
    if variant == 'h5':
        hosts[1] = eps - 1
    nxt = eps
    for j, host in enumerate(hosts, 1):
        edges.append((host - 1, nxt))
        labels['tau{}'.format(j)] = nxt
        nxt += 1
    omega_host = eps - 1 if variant == 'h3' else eps - 2
    labels['omega1'] = eps - 1
    for j in range(2, s + 1):
        edges.append((omega_host, nxt))
        labels['omega{}'.format(j)] = nxt
        nxt += 1
    return FamilyGraph(Graph.from_edges(nxt, edges), spec, labels)


def script_h_realizable(n: int, alpha: int) -> bool:
    if alpha == 0:
        return n == 3
    eps = n - alpha + 1
    return alpha >= 1 and eps >= 4 and alpha <= n // 2


def triangle_comb(n: int, alpha: int) -> FamilyGraph:
    """
    Triangle, path v3..v(eps) with eps = n-alpha+1, single pendants on
    v(eps-alpha)..v(eps-2) and v(eps) hanging from v(eps-1): alpha p-dominators in all.
    alpha = 0 gives the triangle (n = 3).

    :raises: TypeError, UnrealizableFamilyError
    """
    _check_ints(n=n, alpha=alpha)
    spec = FamilySpec.of('scriptH', n=n, alpha=alpha)
    if not script_h_realizable(n, alpha):
        raise UnrealizableFamilyError("scriptH is not realizable for n={} alpha={}".format(n, alpha))
    if alpha == 0:
        return FamilyGraph(cycle(3).graph, spec, _numbered(3))
    member = triangle_path_family('h2', n - alpha + 1, alpha - 1)
    return FamilyGraph(member.graph, spec, member.labels)


# ====================
# SUNLIKE AND CORONA
# ====================
def sunlike(g: int, k: int) -> FamilyGraph:
    """Cycle v1..vg with one pendant u_i at each of v1..vk"""
    _check_ints(g=g, k=k)
    _require(g >= 3, "sunlike needs g >= 3, got {}".format(g))
    _require(0 <= k <= g, "sunlike needs 0 <= k <= g, got k={} g={}".format(k, g))
    edges = _cycle_edges(g) + [(i, g + i) for i in range(k)]
    labels = _numbered(g)
    labels.update({'u{}'.format(i + 1): g + i for i in range(k)})
    return FamilyGraph(Graph.from_edges(g + k, edges), FamilySpec.of('sunlike', g=g, k=k), labels)


def corona(base: str, n: int) -> FamilyGraph:
    """Corona of a path, cycle or complete graph on n vertices with K1; u_i hangs on v_i"""
    bases: dict[str, Callable[[int], FamilyGraph]] = {'path': path, 'cycle': cycle, 'complete': complete}
    if base not in bases:
        raise ValueError("corona base must be one of: {}, got '{}'".format(", ".join(bases), base))
    h = bases[base](n).graph
    graph = corona_product(h, Graph.empty(1))
    labels = _numbered(n)
    labels.update({'u{}'.format(i + 1): n + i for i in range(n)})
    return FamilyGraph(graph, FamilySpec.of('corona', base=base, n=n), labels)


h_family = triangle_path_family
script_h = triangle_comb
sunlike_star = sunlike


# ====================
# REGISTRY
# ====================
def family_builders() -> dict[str, Callable[[FamilySpec], FamilyGraph]]:
    """
    Enum-like instance mapping every variant to its constructor

    > family_builders()[spec.variant](spec)

    :return: Pointer to builder function
    """
    def h(variant: str) -> Callable[[FamilySpec], FamilyGraph]:
        return lambda spec: triangle_path_family(variant, spec.get('eps'), spec.get('k'),
                                                 spec.get('a'), spec.get('s'))
    return {
        'path': lambda spec: path(spec.get('n')),
        'cycle': lambda spec: cycle(spec.get('n')),
        'complete': lambda spec: complete(spec.get('n')),
        'lollipop': lambda spec: lollipop(spec.get('g'), spec.get('l')),
        'c3star': lambda spec: c3_star(spec.get('n'), spec.get('k')),
        'fgraph': lambda spec: f_graph(spec.get('g'), spec.get('l'), dict(spec.get('attach'))),
        'h1': h('h1'),
        'h2': h('h2'),
        'h3': h('h3'),
        'h4': h('h4'),
        'h5': h('h5'),
        'scriptH': lambda spec: triangle_comb(spec.get('n'), spec.get('alpha')),
        'sunlike': lambda spec: sunlike(spec.get('g'), spec.get('k')),
        'corona': lambda spec: corona(spec.get('base'), spec.get('n')),
    }


def build(spec: Union[FamilySpec, str]) -> FamilyGraph:
    """
    :param spec: family specification or its text form
    :type spec: FamilySpec or str

    :raises: TypeError, ValueError, UnrealizableFamilyError
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if not isinstance(spec, FamilySpec):
        raise TypeError("Expected FamilySpec, got '{}' instead".format(type(spec)))
    member = family_builders()[spec.variant](spec)
    return FamilyGraph(member.graph, spec, member.labels, member.flags)


def catalog(n: int) -> Iterator[FamilyGraph]:
    """Every fully parameterised family member of order n, most specific first"""
    for alpha in range(0, n // 2 + 1):
        if script_h_realizable(n, alpha):
            yield triangle_comb(n, alpha)
    for k in range(0, n - 2):
        yield c3_star(n, k)
    for g in range(3, n):
        yield lollipop(g, n - g)
    for g in range(max(3, (n + 1) // 2), n + 1):
        yield sunlike(g, n - g)
    if n % 2 == 0 and n >= 2:
        for base in ('path', 'cycle', 'complete'):
            if base == 'cycle' and n // 2 < 3:
                continue
            yield corona(base, n // 2)
    yield path(n)
    if n >= 3:
        yield cycle(n)
    yield complete(n)
