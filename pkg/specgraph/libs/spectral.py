# -*- coding: utf-8 -*-
#
"""

This file contains the signless Laplacian Q = D + A, its least eigenpair and full
spectrum, and the validators that check eigenvector structure on concrete graphs.

Validators return a CheckOutcome (pass, fail or skip). They skip when the least
eigenvalue is not simple, because the eigenvector is not unique then.

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np
from scipy import linalg as sla

from .config import Config
from .families import f_layouts, classify_layout
from .graph import (Graph, GraphError, branches, coalescence, delete_edge, is_bipartite, is_connected,
                    is_unicyclic, iter_bits, unique_cycle)

logger = logging.getLogger(__name__)


class ShapeError(ValueError):
    """Graph does not have the shape a validator needs"""


class ConvergenceError(ArithmeticError):
    """Eigensolver residual above tolerance, or a negative eigenvalue beyond the PSD clamp"""


# ====================
# TYPES
# ====================
class VertexVector(object):
    """One real value per vertex"""

    __slots__ = ('_values',)

    def __init__(self, values: Iterable[float], unit: bool = False) -> None:
        """
        :param values: entries indexed by vertex
        :type values: iterable(float)

        :param unit: require a unit 2-norm
        :type unit: bool

        :raises: ValueError
        """
        arr = np.array(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
        if arr.ndim != 1:
            raise ValueError("Expected a flat vector, got shape {}".format(arr.shape))
        if unit and abs(np.linalg.norm(arr) - 1.0) > 1e-12:
            raise ValueError("Vector is not unit, norm={}".format(np.linalg.norm(arr)))
        arr.setflags(write=False)
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, v: int) -> float:
        return float(self._values[v])

    def to_list(self) -> list[float]:
        return [float(x) for x in self._values]

    def __repr__(self) -> str:
        return "VertexVector({})".format(self.to_list())


@dataclass(frozen=True)
class SpectralResult(object):
    q_min: float
    eigenvector: VertexVector
    residual: float
    multiplicity: int

    def to_dict(self, vector: bool = False) -> dict:
        out = {'q_min': self.q_min, 'multiplicity': self.multiplicity, 'residual': self.residual}
        if vector:
            out['eigenvector'] = self.eigenvector.to_list()
        return out


@dataclass(frozen=True)
class CheckOutcome(object):
    status: str
    detail: str = ''

    def __post_init__(self) -> None:
        if self.status not in ('pass', 'fail', 'skip'):
            raise ValueError("Invalid value for status parameter, must be one of: pass, fail, skip")

    def __bool__(self) -> bool:
        return self.status != 'fail'

    @classmethod
    def ok(cls, detail: str = '') -> 'CheckOutcome':
        return cls('pass', detail)

    @classmethod
    def failed(cls, detail: str) -> 'CheckOutcome':
        return cls('fail', detail)

    @classmethod
    def skipped(cls, detail: str) -> 'CheckOutcome':
        return cls('skip', detail)


# ====================
# MATRIX AND EIGENSOLVES
# ====================
def q_matrix(g: Graph) -> np.ndarray:
    """
    :param g: graph
    :type g: Graph

    :return: n x n signless Laplacian, degrees on the diagonal
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    n = g.order
    q = np.zeros((n, n))
    for u, v in g.edges():
        q[u, v] = q[v, u] = 1.0
    np.fill_diagonal(q, g.degrees())
    return q


def _clamp(value: float) -> float:
    if value >= 0:
        return float(value)
    if value >= -Config.tolerance('psd'):
        return 0.0
    raise ConvergenceError("Eigenvalue {} of a PSD matrix is below -{}".format(value, Config.tolerance('psd')))


def q_spectrum(g: Graph) -> tuple[float, ...]:
    """
    All Q-eigenvalues, largest first

    :raises: TypeError, ValueError, ConvergenceError
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    if g.order < 1:
        raise ValueError("Spectrum needs at least one vertex")
    q = q_matrix(g)
    values = [_clamp(v) for v in np.linalg.eigvalsh(q)[::-1]]
    trace = 2 * g.size
    if abs(sum(values) - trace) > Config.tolerance('residual') * max(1, trace):
        raise ConvergenceError("Spectrum sums to {} instead of trace {}".format(sum(values), trace))
    return tuple(values)


def _tridiagonal_least(q: np.ndarray) -> tuple[float, np.ndarray]:
    """Least eigenpair through Householder reduction and bisection on the tridiagonal form"""
    h, z = sla.hessenberg(q, calc_q=True)
    d = np.diag(h).copy()
    e = np.diag(h, -1).copy()
    w, v = sla.eigh_tridiagonal(d, e, select='i', select_range=(0, 0), tol=Config.tolerance('eigen'))
    x = z @ v[:, 0]
    return float(w[0]), x / np.linalg.norm(x)


def _sign_normalize(x: np.ndarray) -> np.ndarray:
    top = np.max(np.abs(x))
    if top == 0:
        return x
    first = int(np.argmax(np.abs(x) >= top * (1 - 1e-9)))
    return -x if x[first] < 0 else x


def q_min(g: Graph) -> SpectralResult:
    """
    Least Q-eigenvalue with a unit eigenvector; the first entry of largest magnitude
    is made positive. An eigh result whose residual exceeds the eigen tolerance, scaled by
    twice the largest degree, is recomputed by tridiagonal bisection.

    :raises: TypeError, ValueError, ConvergenceError
    """
    if not isinstance(g, Graph):
        raise TypeError("Expected Graph, got '{}' instead".format(type(g)))
    if g.order < 1:
        raise ValueError("q_min needs at least one vertex")
    q = q_matrix(g)
    values, vectors = np.linalg.eigh(q)
    least, x = float(values[0]), vectors[:, 0]
    residual = float(np.max(np.abs(q @ x - least * x)))
    # eigen is relative to the row-sum norm of Q, i.e. twice the largest degree
    accept = Config.tolerance('eigen') * max(1.0, float(np.max(np.abs(q).sum(axis=1))))
    if residual > accept:
        logger.warning("eigh residual %.3g on %r, retrying with tridiagonal bisection", residual, g)
        least, x = _tridiagonal_least(q)
        residual = float(np.max(np.abs(q @ x - least * x)))
        if residual > max(accept, Config.tolerance('residual')):
            raise ConvergenceError("Residual {} above tolerance on {!r}".format(residual, g))
    multiplicity = int(np.count_nonzero(values <= values[0] + Config.tolerance('cluster')))
    x = _sign_normalize(x)
    return SpectralResult(_clamp(least), VertexVector(x), residual, multiplicity)


def rayleigh(g: Graph, x: Union[VertexVector, Iterable[float]]) -> float:
    """Sum of (x_i + x_j)^2 over the edges, i.e. x^T Q x"""
    values = _as_array(g, x)
    return float(sum((values[u] + values[v]) ** 2 for u, v in g.edges()))


def _as_array(g: Graph, x: Union[VertexVector, SpectralResult, Iterable[float]]) -> np.ndarray:
    if isinstance(x, SpectralResult):
        x = x.eigenvector
    values = x.values if isinstance(x, VertexVector) else np.asarray(list(x), dtype=float)
    if values.shape != (g.order,):
        raise ValueError("Vector of length {} does not match order {}".format(len(values), g.order))
    return values


def is_spectrally_bipartite(g: Graph) -> bool:
    return q_min(g).q_min <= Config.tolerance('bipartite')


# ====================
# SPECTRAL INEQUALITIES
# ====================
def check_interlacing(g: Graph, edge: tuple[int, int]) -> CheckOutcome:
    """
    Spectra of g and g - e interleave: s_i <= q_i and q_(i+1) <= s_i, s_n >= 0

    :raises: GraphError when the edge is missing
    """
    u, v = edge
    smaller = delete_edge(g, u, v)
    tol = Config.tolerance('interlacing')
    q = q_spectrum(g)
    s = q_spectrum(smaller)
    n = len(q)
    for i in range(n):
        if s[i] > q[i] + tol:
            return CheckOutcome.failed("s_{} = {:.12g} > q_{} = {:.12g}".format(i + 1, s[i], i + 1, q[i]))
        if i + 1 < n and q[i + 1] > s[i] + tol:
            return CheckOutcome.failed("q_{} = {:.12g} > s_{} = {:.12g}".format(i + 2, q[i + 1], i + 1, s[i]))
    if s[-1] < -tol:
        return CheckOutcome.failed("s_n = {:.12g} is negative".format(s[-1]))
    return CheckOutcome.ok()


def check_qmin_below_mindeg(g: Graph) -> CheckOutcome:
    """
    :raises: ValueError for disconnected graphs or order below 2
    """
    if g.order < 2 or not is_connected(g):
        raise ValueError("Expected a connected graph of order >= 2")
    least = q_min(g).q_min
    delta = g.min_degree()
    if least < delta + Config.tolerance('mindeg'):
        return CheckOutcome.ok("q_min={:.12g} delta={}".format(least, delta))
    return CheckOutcome.failed("q_min={:.12g} is not below delta={}".format(least, delta))


def check_tree_relocation(g1: Graph, v1: int, v2: int, tree: Graph, u: int) -> CheckOutcome:
    """
    Moving a tree from v2 to v1 lowers q_min whenever an eigenvector of the graph with
    the tree at v2 has |x_v1| > |x_v2|, or |x_v1| = |x_v2| > 0.

    :param g1: connected nonbipartite graph
    :param v1: target vertex of g1
    :param v2: current attachment vertex of g1
    :param tree: nontrivial tree
    :param u: vertex of the tree identified with the attachment vertex

    :raises: ShapeError
    """
    if not is_connected(g1) or is_bipartite(g1):
        raise ShapeError("First graph must be connected and nonbipartite")
    if v1 == v2:
        raise ShapeError("Attachment vertices must be distinct")
    if tree.order < 2 or tree.size != tree.order - 1 or not is_connected(tree):
        raise ShapeError("Second graph must be a nontrivial tree")
    try:
        current = coalescence(g1, v2, tree, u)
        moved = coalescence(g1, v1, tree, u)
    except GraphError as e:
        raise ShapeError(str(e)) from e
    before = q_min(current)
    if before.multiplicity > 1:
        return CheckOutcome.skipped("q_min has multiplicity {}".format(before.multiplicity))
    x = before.eigenvector.values
    thr = Config.tolerance('zero') * float(np.max(np.abs(x)))
    a, b = abs(x[v1]), abs(x[v2])
    if not (a > b + thr or (abs(a - b) <= thr and a > thr)):
        return CheckOutcome.skipped("|x_v1|={:.12g} |x_v2|={:.12g} do not meet the precondition".format(a, b))
    after = q_min(moved).q_min
    if after < before.q_min - Config.tolerance('relocation'):
        return CheckOutcome.ok("{:.12g} -> {:.12g}".format(before.q_min, after))
    return CheckOutcome.failed("q_min did not drop: {:.12g} -> {:.12g}".format(before.q_min, after))


# ====================
# EIGENVECTOR STRUCTURE
# ====================
def _eigenpair(g: Graph, x: Optional[Union[SpectralResult, VertexVector, Iterable[float]]]
               ) -> tuple[np.ndarray, int]:
    """Least eigenvector and multiplicity; a given vector is checked against Q"""
    if x is None:
        x = q_min(g)
    if isinstance(x, SpectralResult):
        return x.eigenvector.values, x.multiplicity
    vec = _as_array(g, x)
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise ValueError("Zero vector is not an eigenvector")
    vec = vec / norm
    q = q_matrix(g)
    value = float(vec @ q @ vec)
    residual = float(np.max(np.abs(q @ vec - value * vec)))
    if residual > Config.tolerance('residual'):
        raise ValueError("Vector is not an eigenvector, residual {:.3g}".format(residual))
    spectrum = np.linalg.eigvalsh(q)
    cluster = Config.tolerance('cluster')
    if value > spectrum[0] + cluster:
        raise ValueError("Vector belongs to {:.12g}, not to q_min={:.12g}".format(value, spectrum[0]))
    return vec, int(np.count_nonzero(spectrum <= spectrum[0] + cluster))


def _threshold(x: np.ndarray) -> float:
    return Config.tolerance('zero') * float(np.max(np.abs(x)))


def _bfs_parents(g: Graph, root: int, allowed: int) -> dict[int, int]:
    parent = {root: -1}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adjacency[v] & allowed):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return parent


def _branch_masks(g: Graph, root: int, member: Optional[int]) -> list[int]:
    parts = [part.bits for part in branches(g, root)]
    if member is not None:
        parts = [bits for bits in parts if bits >> member & 1]
        if not parts:
            raise ShapeError("Vertex {} is not in a branch at {}".format(member, root))
    return parts


def validate_zero_branch(g: Graph, x: Optional[Union[SpectralResult, VertexVector, Iterable[float]]],
                         root: int, member: Optional[int] = None) -> CheckOutcome:
    """
    Bipartite branch at root: a zero root forces a zero branch, a nonzero root forces
    nonzero entries alternating in sign along every branch edge.

    :param member: a vertex picking one branch; every bipartite branch when None

    :raises: ShapeError, ValueError
    """
    if not is_connected(g):
        raise ShapeError("Graph must be connected")
    parts = []
    for bits in _branch_masks(g, root, member):
        if is_bipartite(g.induced_mask(bits | 1 << root)):
            parts.append(bits)
        elif member is not None:
            raise ShapeError("Branch at {} holding {} is not bipartite".format(root, member))
    if not parts:
        raise ShapeError("No bipartite branch at {}".format(root))
    x, multiplicity = _eigenpair(g, x)
    if multiplicity > 1:
        return CheckOutcome.skipped("q_min has multiplicity {}".format(multiplicity))
    thr = _threshold(x)
    for bits in parts:
        if abs(x[root]) <= thr:
            for p in iter_bits(bits):
                if abs(x[p]) > thr:
                    return CheckOutcome.failed("root {} is zero but x_{}={:.12g}".format(root, p, x[p]))
            continue
        for p in iter_bits(bits):
            if abs(x[p]) <= thr:
                return CheckOutcome.failed("root {} is nonzero but x_{} vanishes".format(root, p))
        inside = bits | 1 << root
        for p in iter_bits(inside):
            for t in iter_bits(g.adjacency[p] & inside):
                if p < t and x[p] * x[t] >= 0:
                    return CheckOutcome.failed("edge {}-{} keeps its sign".format(p, t))
    return CheckOutcome.ok()


def validate_tree_monotone(g: Graph, x: Optional[Union[SpectralResult, VertexVector, Iterable[float]]],
                           root: int, member: Optional[int] = None) -> CheckOutcome:
    """
    Nonzero tree branch at root: magnitudes grow strictly away from the root.

    :raises: ShapeError, ValueError
    """
    if not is_connected(g) or is_bipartite(g):
        raise ShapeError("Graph must be connected and nonbipartite")
    trees = []
    for bits in _branch_masks(g, root, member):
        inside = bits | 1 << root
        if g.induced_mask(inside).size == inside.bit_count() - 1:
            trees.append(bits)
        elif member is not None:
            raise ShapeError("Branch at {} holding {} is not a tree".format(root, member))
    if not trees:
        raise ShapeError("No tree branch at {}".format(root))
    x, multiplicity = _eigenpair(g, x)
    if multiplicity > 1:
        return CheckOutcome.skipped("q_min has multiplicity {}".format(multiplicity))
    if abs(x[root]) <= _threshold(x):
        return CheckOutcome.skipped("root {} is zero, the branch is a zero branch".format(root))
    strict = Config.tolerance('strict')
    for bits in trees:
        parent = _bfs_parents(g, root, bits | 1 << root)
        for p, t in parent.items():
            if t >= 0 and not abs(x[p]) - abs(x[t]) > strict:
                return CheckOutcome.failed("|x_{}|={:.12g} does not exceed |x_{}|={:.12g}".format(
                    p, abs(x[p]), t, abs(x[t])))
    return CheckOutcome.ok()


def odd_ear(g: Graph) -> tuple[int, tuple[int, ...]]:
    """
    Split g as an odd cycle glued at one vertex v0 to a bipartite rest.

    :return: v0 and the other cycle vertices v1..v2k in cyclic order

    :raises: ShapeError
    """
    if g.order < 3 or not is_connected(g):
        raise ShapeError("Graph must be connected with at least 3 vertices")
    adj = g.adjacency
    degree = g.degrees()
    if all(d == 2 for d in degree):
        if g.order % 2 == 0:
            raise ShapeError("Even cycle has no odd ear")
        ear = [0]
        prev, cur = -1, 0
        while True:
            step = min(w for w in iter_bits(adj[cur]) if w != prev) if prev < 0 else \
                next(w for w in iter_bits(adj[cur]) if w != prev)
            if step == 0:
                break
            ear.append(step)
            prev, cur = cur, step
        return 0, tuple(ear[1:])
    for v0 in g.vertices():
        if degree[v0] < 3:
            continue
        for first in iter_bits(adj[v0]):
            if degree[first] != 2:
                continue
            walk = [first]
            prev, cur = v0, first
            while degree[cur] == 2:
                step = next(w for w in iter_bits(adj[cur]) if w != prev)
                if step == v0 or degree[step] != 2:
                    cur = step
                    break
                walk.append(step)
                prev, cur = cur, step
            if cur != v0 or len(walk) < 2 or len(walk) % 2:
                continue
            rest = g.full_mask & ~sum(1 << w for w in walk)
            if is_bipartite(g.induced_mask(rest)):
                return v0, tuple(walk)
    raise ShapeError("Graph is not an odd cycle glued at one vertex to a bipartite graph")


def validate_odd_cycle_symmetry(g: Graph, x: Optional[Union[SpectralResult, VertexVector, Iterable[float]]] = None
                                ) -> CheckOutcome:
    """
    Odd cycle v0 v1 .. v2k glued at v0 to a bipartite graph: |x_0| is the cycle maximum,
    the cycle entries mirror around v0 and signs alternate away from v0.

    :raises: ShapeError, ValueError
    """
    v0, ear = odd_ear(g)
    x, multiplicity = _eigenpair(g, x)
    if multiplicity > 1:
        return CheckOutcome.skipped("q_min has multiplicity {}".format(multiplicity))
    thr = _threshold(x)
    ring = [x[v0]] + [x[v] for v in ear]
    k = len(ear) // 2
    top = max(abs(v) for v in ring)
    if not abs(ring[0]) > thr or abs(ring[0]) < top - thr:
        return CheckOutcome.failed("|x_0|={:.12g} is not the cycle maximum {:.12g}".format(abs(ring[0]), top))
    for i in range(1, k + 1):
        if abs(ring[i] - ring[2 * k - i + 1]) > thr:
            return CheckOutcome.failed("x_{} != x_{}".format(i, 2 * k - i + 1))
    slack = thr * top
    for i in range(1, k + 1):
        if ring[i] * ring[i - 1] > slack:
            return CheckOutcome.failed("x_{} x_{} > 0".format(i, i - 1))
    if ring[2 * k] * ring[0] > slack:
        return CheckOutcome.failed("x_{} x_0 > 0".format(2 * k))
    for i in range(2, k + 1):
        if ring[2 * k - i + 1] * ring[2 * k - i + 2] > slack:
            return CheckOutcome.failed("x_{} x_{} > 0".format(2 * k - i + 1, 2 * k - i + 2))
    return CheckOutcome.ok("v0={}".format(v0))


def _distances(g: Graph, root: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adjacency[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


class _CycleReading(object):
    """One re-indexing v1..vg of the cycle with v1 of least magnitude"""

    def __init__(self, g: Graph, x: np.ndarray, order: list[int], s: int, thr: float, strict: float) -> None:
        self.g = g
        self.x = x
        self.order = order
        self.y = [float(x[v]) for v in order]
        self.m = [abs(v) for v in self.y]
        self.s = s
        self.thr = thr
        self.strict = strict

    def less(self, a: int, b: int) -> bool:
        return self.m[b] - self.m[a] > self.strict

    def at_most(self, a: int, b: int) -> bool:
        return self.m[a] <= self.m[b] + self.thr

    def alternating(self, start: int, stop: int) -> bool:
        return all(self.y[j] * self.y[j + 1] < 0 for j in range(start, stop))

    def failure(self) -> Optional[str]:
        y, m, s = self.y, self.m, self.s
        g = len(y)
        if not self.less(0, s):
            return "|x_1| is not below |x_s|"
        if m[0] <= self.thr:
            return self.zero_case()
        # chains toward v_s from both sides
        if 2 <= s <= g - 2:
            if not all(self.less(j, j + 1) for j in range(1, s - 1)) or not self.at_most(s - 1, s):
                return "magnitudes do not rise from v_2 to v_s"
            if not all(self.less(j, j - 1) for j in range(g - 1, s + 1, -1)) or not self.at_most(s + 1, s):
                return "magnitudes do not rise from v_g to v_s"
        if m[1] - m[g - 1] > self.thr:
            if not (y[0] * y[g - 1] > 0 and self.alternating(0, g - 1) and self.at_most(0, g - 1)):
                return "|x_2| > |x_g| without the matching sign pattern"
        elif m[g - 1] - m[1] > self.thr:
            if not (y[0] * y[1] > 0 and self.alternating(1, g - 1) and y[g - 1] * y[0] < 0
                    and self.at_most(0, 1)):
                return "|x_2| < |x_g| without the matching sign pattern"
        else:
            if not self.at_most(0, 1):
                return "|x_1| exceeds |x_2| = |x_g|"
            left, right = y[0] * y[g - 1] > 0, y[0] * y[1] > 0
            if left == right:
                return "x_1 x_g > 0 and x_1 x_2 > 0 are not exclusive"
            if left and not self.alternating(0, g - 1):
                return "signs do not alternate from v_1 to v_g"
            if right and not (self.alternating(1, g - 1) and y[g - 1] * y[0] < 0):
                return "signs do not alternate from v_2 to v_1"
        if not (self.less((s + 1) % g, s) or self.less(s - 1, s)):
            return "both cycle neighbours of v_s reach |x_s|"
        return None

    def zero_case(self) -> Optional[str]:
        y, g, thr = self.y, len(self.y), self.thr
        if not (abs(y[g - 1] + y[1]) <= thr and abs(y[1]) > thr):
            return "x_1 = 0 but x_g != -x_2 or x_2 = 0"
        for j in range(g - 1):
            if abs(y[j]) > thr and abs(y[j + 1]) > thr and y[j] * y[j + 1] >= 0:
                return "x_1 = 0 but x_{} x_{} >= 0".format(j + 1, j + 2)
        opened = delete_edge(self.g, self.order[0], self.order[-1])
        dist = _distances(opened, self.order[0])
        for sigma in (1, -1):
            if all(abs(self.x[v]) <= thr or np.sign(self.x[v]) == sigma * (-1) ** dist[v]
                   for v in self.g.vertices()):
                return None
        return "x_1 = 0 but signs do not follow distance parity"


def validate_unicyclic_signs(g: Graph, x: Optional[Union[SpectralResult, VertexVector, Iterable[float]]] = None
                             ) -> CheckOutcome:
    """
    Nonbipartite unicyclic graph with cycle v1..vg, v1 of least and v_s of largest
    magnitude on the cycle: checks the zero case sign rule, or the monotone chains and
    sign products of the nonzero case.

    Every admissible re-indexing is tried (each least-magnitude start, both
    orientations, each largest-magnitude v_s with s >= 2); one match passes.

    :raises: ShapeError, ValueError
    """
    if not is_unicyclic(g):
        raise ShapeError("Graph is not unicyclic")
    cyc = list(unique_cycle(g))
    if len(cyc) % 2 == 0:
        raise ShapeError("The cycle has even length {}".format(len(cyc)))
    x, multiplicity = _eigenpair(g, x)
    if multiplicity > 1:
        return CheckOutcome.skipped("q_min has multiplicity {}".format(multiplicity))
    thr = _threshold(x)
    strict = Config.tolerance('strict')
    mags = [abs(x[v]) for v in cyc]
    low, high = min(mags), max(mags)
    length = len(cyc)
    reason = None
    for i, mag in enumerate(mags):
        if mag > low + thr:
            continue
        for direction in (1, -1):
            order = [cyc[(i + direction * j) % length] for j in range(length)]
            for s in range(1, length):
                if abs(x[order[s]]) < high - thr:
                    continue
                reading = _CycleReading(g, x, order, s, thr, strict)
                failure = reading.failure()
                if failure is None:
                    return CheckOutcome.ok("v1={} s={}".format(order[0], s + 1))
                reason = reason or failure
    return CheckOutcome.failed(reason or "no admissible re-indexing")


def validate_triangle_attachment_max(g: Graph,
                                     x: Optional[Union[SpectralResult, VertexVector, Iterable[float]]] = None
                                     ) -> CheckOutcome:
    """
    Triangle lollipop with pendants (every p-dominator but the last path support has one
    pendant): the attachment vertex v3 carries the largest triangle magnitude.

    :raises: ShapeError, ValueError
    """
    layouts = [layout for layout in f_layouts(g)
               if layout.girth == 3 and classify_layout(g, layout)['script']]
    if not layouts:
        raise ShapeError("Graph is not a triangle lollipop with single pendants")
    x, multiplicity = _eigenpair(g, x)
    if multiplicity > 1:
        return CheckOutcome.skipped("q_min has multiplicity {}".format(multiplicity))
    thr = _threshold(x)
    for layout in layouts:
        v3 = layout.attachment
        for v in layout.cycle:
            if abs(x[v]) > abs(x[v3]) + thr:
                return CheckOutcome.failed("|x_{}|={:.12g} exceeds |x_v3|={:.12g}".format(v, abs(x[v]), abs(x[v3])))
    return CheckOutcome.ok()
