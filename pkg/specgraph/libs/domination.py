# -*- coding: utf-8 -*-
#
"""

This file contains the exact domination-number solver and the closed-form
predictions it is checked against

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .families import FamilySpec
from .graph import Graph, VertexSet, iter_bits, p_dominators, pendant_neighbors, pendant_vertices

logger = logging.getLogger(__name__)


class InfeasibleConstraintsError(ValueError):
    """No dominating set satisfies the include/exclude constraints"""


@dataclass(frozen=True)
class DominationResult(object):
    gamma: int
    witness: VertexSet
    include: VertexSet = VertexSet()
    exclude: VertexSet = VertexSet()

    def to_dict(self) -> dict:
        return {
            'gamma': self.gamma,
            'witness': list(self.witness),
            'include': list(self.include),
            'exclude': list(self.exclude),
        }


def _as_set(value: Optional[Union[VertexSet, Iterable[int]]]) -> VertexSet:
    if value is None:
        return VertexSet()
    if isinstance(value, VertexSet):
        return value
    return VertexSet(value)


def is_dominating_set(g: Graph, s: Union[VertexSet, Iterable[int]]) -> bool:
    """
    :param g: graph
    :type g: Graph

    :param s: candidate set
    :type s: VertexSet

    :raises: TypeError, ValueError
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    s = _as_set(s)
    if s.bits & ~g.full_mask:
        raise ValueError("Set {} is not inside 0..{}".format(list(s), g.order - 1))
    covered = 0
    for v in s:
        covered |= g.closed_neighborhood(v)
    return covered == g.full_mask


# ====================
# BRANCH AND BOUND
# ====================
class _BranchAndBound(object):
    """
    Minimum dominating set over a candidate pool.

    Branches on the undominated vertex with the fewest candidate dominators; each
    sibling excludes the dominators tried before it. Lower bound: undominated count
    over the best single-vertex coverage.
    """

    def __init__(self, g: Graph) -> None:
        self.n = g.order
        self.full = g.full_mask
        self.closed = [g.closed_neighborhood(v) for v in range(self.n)]

    def cover(self, bits: int) -> int:
        covered = 0
        for v in iter_bits(bits):
            covered |= self.closed[v]
        return covered

    def greedy(self, chosen: int, pool: int) -> Optional[int]:
        dominated = self.cover(chosen)
        while dominated != self.full:
            best, gain = -1, 0
            for v in iter_bits(pool & ~chosen):
                c = (self.closed[v] & ~dominated).bit_count()
                if c > gain:
                    best, gain = v, c
            if best < 0:
                return None
            chosen |= 1 << best
            dominated |= self.closed[best]
        return chosen

    def solve(self, chosen: int, pool: int, limit: Optional[int] = None) -> Optional[int]:
        """Smallest dominating set containing chosen inside chosen|pool, of size <= limit when given"""
        self.best: Optional[int] = None
        self.best_size = self.n + 1 if limit is None else limit + 1
        self.first_hit = limit is not None
        if limit is None:
            start = self.greedy(chosen, pool)
            if start is not None:
                self.best, self.best_size = start, start.bit_count()
        self._branch(chosen, self.cover(chosen), pool & ~chosen)
        return self.best

    def _branch(self, chosen: int, dominated: int, pool: int) -> None:
        if self.first_hit and self.best is not None:
            return
        size = chosen.bit_count()
        if dominated == self.full:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
            return
        if size + 1 >= self.best_size:
            return
        undominated = self.full & ~dominated
        target, options, widest = -1, 0, 0
        for u in iter_bits(undominated):
            opts = self.closed[u] & pool
            if not opts:
                return
            if target < 0 or opts.bit_count() < options.bit_count():
                target, options = u, opts
        for v in iter_bits(pool):
            widest = max(widest, (self.closed[v] & undominated).bit_count())
        missing = undominated.bit_count()
        if size + -(-missing // widest) >= self.best_size:
            return
        ranked = sorted(iter_bits(options), key=lambda v: (-(self.closed[v] & undominated).bit_count(), v))
        for v in ranked:
            self._branch(chosen | 1 << v, dominated | self.closed[v], pool & ~(1 << v))
            pool &= ~(1 << v)


def _check_constraints(g: Graph, include: VertexSet, exclude: VertexSet) -> None:
    if (include.bits | exclude.bits) & ~g.full_mask:
        raise ValueError("Constraint vertices must lie in 0..{}".format(g.order - 1))
    if include.bits & exclude.bits:
        raise ValueError("Vertices {} are both included and excluded".format(list(include & exclude)))
    pool = g.full_mask & ~exclude.bits
    dominated = 0
    for v in include:
        dominated |= g.closed_neighborhood(v)
    for u in g.vertices():
        if not dominated >> u & 1 and not g.closed_neighborhood(u) & pool:
            raise InfeasibleConstraintsError(
                "Vertex {} cannot be dominated: its closed neighbourhood is excluded".format(u))


def gamma(g: Graph) -> int:
    """Domination number without a witness"""
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    if g.order == 0:
        return 0
    best = _BranchAndBound(g).solve(0, g.full_mask)
    assert best is not None
    return best.bit_count()


def domination_number(g: Graph, include: Optional[Union[VertexSet, Iterable[int]]] = None,
                      exclude: Optional[Union[VertexSet, Iterable[int]]] = None) -> DominationResult:
    """
    Exact minimum dominating set containing include and avoiding exclude.

    The witness is the lexicographically least minimum set by vertex index.

    :param g: graph
    :type g: Graph

    :raises: TypeError, ValueError, InfeasibleConstraintsError
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    include, exclude = _as_set(include), _as_set(exclude)
    _check_constraints(g, include, exclude)
    if g.order == 0:
        return DominationResult(0, VertexSet(), include, exclude)
    solver = _BranchAndBound(g)
    pool = g.full_mask & ~exclude.bits
    best = solver.solve(include.bits, pool)
    assert best is not None
    size = best.bit_count()

    # fix the witness one position at a time, smallest feasible vertex first
    chosen = include.bits
    skipped = 0
    for v in g.vertices():
        if chosen.bit_count() == size and solver.cover(chosen) == g.full_mask:
            break
        if chosen >> v & 1 or not pool >> v & 1:
            continue
        trial = chosen | 1 << v
        rest = pool & ~skipped & ~trial & ~((1 << (v + 1)) - 1)
        if solver.solve(trial, rest, limit=size) is not None:
            chosen = trial
        else:
            skipped |= 1 << v
    logger.debug("gamma=%d witness=%s", size, list(iter_bits(chosen)))
    return DominationResult(size, VertexSet.from_bits(chosen), include, exclude)


def minimal_dominating_set_avoiding_pendants(g: Graph) -> DominationResult:
    """
    Minimum dominating set among those holding every p-dominator and no pendant vertex.
    Callers compare its gamma with the unconstrained one.

    :raises: TypeError, ValueError
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    pendants = pendant_vertices(g)
    if not pendants:
        raise ValueError("Graph has no pendant vertex")
    supports = p_dominators(g)
    if pendants & supports:
        raise ValueError("A pendant vertex is also a p-dominator (K2 component)")
    return domination_number(g, include=supports, exclude=pendants)


def ore_bound(n: int) -> int:
    """Largest domination number of a connected graph of order n"""
    return 1 if n <= 1 else n // 2


def corona_characterization(g: Graph) -> bool:
    """C4, or every vertex is a pendant or has exactly one pendant neighbour"""
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    if g.order == 4 and g.size == 4 and all(d == 2 for d in g.degrees()):
        return True
    if g.order == 0:
        return False
    pendants = pendant_vertices(g)
    return all(v in pendants or len(pendant_neighbors(g, v)) == 1 for v in g.vertices())


# ====================
# CLOSED FORMS
# ====================
def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _packed_gamma(eps: int, k: int) -> int:
    if eps - k - 1 <= 2:
        return k + 1
    return _ceil_div(eps - k - 4, 3) + k + 1


def _whole_third(eps: int, k: int) -> bool:
    return eps - k - 4 >= 0 and (eps - k - 4) % 3 == 0


def gamma_formula(spec: FamilySpec) -> int:
    """
    Predicted domination number of a family member.

    :raises: TypeError, ValueError for variants without a closed form
    """
    if not isinstance(spec, FamilySpec):
        raise TypeError("Expected FamilySpec, got '{}' instead".format(type(spec)))
    variant = spec.variant
    if variant in ('path', 'cycle'):
        return _ceil_div(spec.get('n'), 3)
    if variant == 'sunlike':
        g, k = spec.get('g'), spec.get('k')
        if k == 0:
            return _ceil_div(g, 3)
        return k + _ceil_div(g - k - 2, 3)
    if variant == 'scriptH':
        n, alpha = spec.get('n'), spec.get('alpha')
        if alpha == 0:
            return 1
        if n - 2 * alpha <= 2:
            return alpha
        return _ceil_div(n - 2 * alpha - 2, 3) + alpha
    if variant == 'corona':
        return spec.get('n')
    if variant in ('h2', 'h4', 'h5'):
        eps, k = spec.get('eps'), spec.get('k')
        base = _packed_gamma(eps, k)
        if variant == 'h2':
            return base
        if variant == 'h4':
            if eps - k - 1 <= 2 or not _whole_third(eps, k):
                return base - 1
            return base
        if _whole_third(eps, k) and eps - k - 1 >= 3:
            return base - 1
        raise ValueError("No closed form for h5 with eps={} k={}".format(eps, k))
    raise ValueError("No closed form for variant '{}'".format(variant))
