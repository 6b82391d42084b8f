# -*- coding: utf-8 -*-
#
"""

This file contains the scan engine (least q_min over a filtered graph stream, with
tie-aware argmin and an order-insensitive merge) and the certification suites built on it

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
import math
import multiprocessing
import time
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Union

import numpy as np
from tqdm import tqdm

from .canonical import CanonicalForm, canonical_form
from .config import Config
from .domination import (corona_characterization, domination_number, gamma, gamma_formula,
                         minimal_dominating_set_avoiding_pendants, ore_bound)
from .enumeration import (GraphFilter, WitnessNotFoundError, connected_graphs, filter_stream,
                          prepare_partitions, source_stream, spanning_unicyclic_witness, unicyclic_nonbipartite)
from .families import (FamilyGraph, FamilySpec, UnrealizableFamilyError, build, catalog, f_graph,
                       script_h_realizable, triangle_path_family)
from .graph import (Graph, graph6_encode, is_bipartite, is_unicyclic, odd_girth, p_dominators, pendant_neighbors,
                    pendant_vertices, unique_cycle)
from .report import ArgminEntry, BatteryTally, Comparison, SearchReport
from .spectral import (CheckOutcome, ShapeError, check_interlacing, check_qmin_below_mindeg, check_tree_relocation,
                       is_spectrally_bipartite, q_min, q_spectrum, validate_odd_cycle_symmetry,
                       validate_triangle_attachment_max, validate_tree_monotone, validate_unicyclic_signs,
                       validate_zero_branch)

logger = logging.getLogger(__name__)

REDUCTION_NOTE = ("orders above 9 scan nonbipartite unicyclic graphs with a cycle of length 3 or 5: every "
                  "graph of the full domain has a spanning unicyclic subgraph with the same odd girth and "
                  "domination number, and deleting an edge never raises q_min")


# ====================
# SCAN ENGINE
# ====================
def tie_tolerance(qstar: float) -> float:
    t = Config.tolerance('tie')
    return max(t, t * qstar)


class ScanResult(object):
    """Count, least q_min and the classes within the tie tolerance of it"""

    def __init__(self) -> None:
        self.count = 0
        self.qstar: Optional[float] = None
        self.kept: dict[CanonicalForm, tuple[Graph, float]] = {}
        self.survivors: list[str] = []

    def _lower(self, q: float) -> None:
        if self.qstar is None or q < self.qstar:
            self.qstar = q
            limit = q + tie_tolerance(q)
            self.kept = {form: entry for form, entry in self.kept.items() if entry[1] <= limit}

    def add(self, g: Graph, q: float, collect: bool = False) -> None:
        self.count += 1
        if collect:
            self.survivors.append(graph6_encode(g))
        self._lower(q)
        if q <= self.qstar + tie_tolerance(self.qstar):
            form = canonical_form(g)
            if form not in self.kept:
                self.kept[form] = (g, q)

    def merge(self, other: 'ScanResult') -> None:
        self.count += other.count
        self.survivors.extend(other.survivors)
        if other.qstar is None:
            return
        self._lower(other.qstar)
        limit = self.qstar + tie_tolerance(self.qstar)
        for form, entry in other.kept.items():
            if entry[1] <= limit and form not in self.kept:
                self.kept[form] = entry

    def argmin(self) -> list[tuple[CanonicalForm, Graph, float]]:
        return [(form, g, q) for form, (g, q) in sorted(self.kept.items())]


def _scan(f: GraphFilter, part: int, parts: int, collect: bool, progress: bool,
          stream: Optional[Iterable[Graph]] = None) -> ScanResult:
    result = ScanResult()
    source = stream if stream is not None else source_stream(f, part, parts)
    for g in tqdm(filter_stream(source, f), desc=f.describe(), unit='graph', disable=not progress, leave=False):
        result.add(g, q_min(g).q_min, collect)
    return result


def _init_worker(overrides: dict[str, float]) -> None:
    Config.set_overrides(overrides)


def _scan_part(task: tuple[GraphFilter, int, int, bool]) -> ScanResult:
    f, part, parts, collect = task
    return _scan(f, part, parts, collect, False)


def scan(f: GraphFilter, threads: int = 1, progress: bool = False, collect: bool = False,
         stream: Optional[Iterable[Graph]] = None) -> ScanResult:
    """
    Least q_min over the graphs accepted by f.

    With threads > 1 the generator is split into disjoint partitions scanned by a
    process pool; the merge does not depend on the partition order.

    :param stream: graphs to filter instead of the generator matching f
    :type stream: iterable(Graph)
    """
    if stream is not None or threads <= 1:
        return _scan(f, 0, 1, collect, progress, stream)
    parts = threads * 4
    prepare_partitions(f)
    tasks = [(f, p, parts, collect) for p in range(parts)]
    merged = ScanResult()
    with multiprocessing.Pool(threads, initializer=_init_worker, initargs=(Config.overrides(),)) as pool:
        for result in tqdm(pool.imap(_scan_part, tasks), total=parts, desc=f.describe(), unit='part',
                           disable=not progress, leave=False):
            merged.merge(result)
    logger.debug("merged %d partitions, %d graphs", parts, merged.count)
    return merged


@lru_cache(maxsize=None)
def _catalog_forms(n: int) -> tuple[tuple[CanonicalForm, str], ...]:
    return tuple((canonical_form(member.graph), member.spec.text) for member in catalog(n))


def family_match(form: CanonicalForm) -> Optional[str]:
    """First catalog member of the same order isomorphic to form"""
    for other, text in _catalog_forms(form.order):
        if other == form:
            return text
    return None


def scan_report(suite: str, params: dict, f: GraphFilter, result: ScanResult, scope: str = 'full') -> SearchReport:
    report = SearchReport(suite=suite, params=params, description=f.describe(), count=result.count, scope=scope,
                          tolerance=Config.active_tolerances(), qstar=result.qstar)
    report.argmin = [ArgminEntry(graph6_encode(g), form.text, q, family_match(form))
                     for form, g, q in result.argmin()]
    report.survivors = list(result.survivors)
    if result.count == 0:
        report.set_status('empty-domain')
        report.notes.append("no graph satisfies {}".format(f.describe()))
    return report


def compare(report: SearchReport, f: GraphFilter, candidates: Iterable[FamilySpec]) -> None:
    """Append a comparison of every candidate family member with the scan argmin"""
    forms = {entry.canonical for entry in report.argmin}
    for spec in candidates:
        try:
            member = build(spec)
        except UnrealizableFamilyError as e:
            report.notes.append("{} is not realizable: {}".format(spec.text, e))
            report.comparisons.append(Comparison(spec.text, None, None, False, False))
            continue
        q = q_min(member.graph).q_min
        delta = None if report.qstar is None else q - report.qstar
        matches = canonical_form(member.graph).text in forms
        report.comparisons.append(Comparison(spec.text, q, delta, matches, f.accepts(member.graph)))


def settle(report: SearchReport, expected: Iterable[FamilySpec]) -> None:
    """pass when the argmin is a single class matching one of the expected candidates"""
    if report.status == 'empty-domain':
        return
    texts = {spec.text for spec in expected}
    matched = [c for c in report.comparisons if c.matches and c.candidate in texts]
    if not report.unique:
        report.notes.append("{} classes tie within the tolerance at q*".format(len(report.argmin)))
    for c in report.comparisons:
        if c.candidate in texts and c.q is not None and not c.in_domain:
            report.notes.append("{} is outside the scanned domain".format(c.candidate))
    if report.unique and matched:
        report.notes.append("argmin matches {}".format(matched[0].candidate))
        report.set_status('pass')
    else:
        if not matched:
            report.notes.append("argmin matches none of {}".format(", ".join(sorted(texts))))
        report.set_status('fail')


def _finish(report: SearchReport, start: float) -> SearchReport:
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    logger.info("suite %s finished in %.0f ms: %s", report.suite, report.runtime_ms, report.status)
    return report


def _check_order(n: int, low: int, high: int, odd: bool = False) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("Expected int, got '{}' instead".format(type(n)))
    if not low <= n <= high or (odd and n % 2 == 0):
        raise ValueError("n must be {}in {}..{}, got {}".format("odd and " if odd else "", low, high, n))


# ====================
# EXTREMAL SUITES
# ====================
def certify_near_half_domination(n: int, threads: int = 1, progress: bool = False) -> SearchReport:
    """
    Connected nonbipartite graphs of odd order n with γ = (n-1)/2: the least q_min
    must be attained by a single class, one of the triangle combs with
    alpha = (n-3)/2 or alpha = (n-1)/2.

    :raises: TypeError, ValueError
    """
    _check_order(n, 5, 9, odd=True)
    start = time.perf_counter()
    logger.info("suite near-half n=%d", n)
    f = GraphFilter(order=n, nonbipartite=True, gamma=(n - 1) // 2)
    report = scan_report('near-half', {'n': n}, f, scan(f, threads, progress))
    candidates = [FamilySpec.of('scriptH', n=n, alpha=(n - 3) // 2), FamilySpec.of('scriptH', n=n, alpha=(n - 1) // 2)]
    compare(report, f, candidates)
    settle(report, candidates)
    return _finish(report, start)


def odd_girth_feasible(n: int, gamma_value: Union[int, float]) -> bool:
    return float(gamma_value).is_integer() and 3 * gamma_value > n + 1 and 2 * gamma_value <= n - 2


def smallest_feasible_order(gamma_value: int) -> Optional[int]:
    """Least n with (n+1)/3 < gamma <= (n-2)/2, None when no order works"""
    return 2 * gamma_value + 2 if gamma_value >= 4 else None


def least_alpha(n: int, gamma_value: int) -> Optional[int]:
    """Least alpha <= (n-3)/2 whose triangle comb of order n has domination number gamma"""
    for alpha in range(1, (n - 3) // 2 + 1):
        if script_h_realizable(n, alpha) and gamma_formula(FamilySpec.of('scriptH', n=n, alpha=alpha)) == gamma_value:
            return alpha
    return None


def certify_short_odd_girth(n: int, gamma_value: Union[int, float], threads: int = 1,
                            progress: bool = False) -> SearchReport:
    """
    Nonbipartite graphs with odd girth at most 5 and (n+1)/3 < γ <= (n-2)/2: the
    least q_min must sit on the triangle comb with the least matching alpha.
    Orders 10..13 are scanned on the unicyclic reduction.

    :raises: TypeError, ValueError
    """
    _check_order(n, 5, 13)
    start = time.perf_counter()
    logger.info("suite odd-girth n=%d gamma=%s", n, gamma_value)
    params = {'n': n, 'gamma': gamma_value}
    if not odd_girth_feasible(n, gamma_value):
        report = SearchReport(suite='odd-girth', params=params, description="(n+1)/3 < gamma <= (n-2)/2",
                              tolerance=Config.active_tolerances(), status='empty-domain')
        report.notes.append("gamma={} is outside (n+1)/3 < gamma <= (n-2)/2 for n={}".format(gamma_value, n))
        if float(gamma_value).is_integer():
            smallest = smallest_feasible_order(int(gamma_value))
            report.notes.append("smallest feasible order for gamma={}: {}".format(
                int(gamma_value), smallest if smallest is not None else "none"))
        logger.warning("odd-girth: empty domain for n=%d gamma=%s", n, gamma_value)
        return _finish(report, start)
    gamma_value = int(gamma_value)
    if n <= 9:
        f = GraphFilter(order=n, nonbipartite=True, gamma=gamma_value, odd_girth_max=5)
        scope = 'full'
    else:
        f = GraphFilter(order=n, nonbipartite=True, unicyclic=True, gamma=gamma_value, odd_girth_max=5)
        scope = 'reduced'
    report = scan_report('odd-girth', params, f, scan(f, threads, progress), scope)
    if scope == 'reduced':
        report.notes.append(REDUCTION_NOTE)
    alpha = least_alpha(n, gamma_value)
    candidates = []
    if alpha is None:
        report.notes.append("no triangle comb of order {} has gamma={}".format(n, gamma_value))
    else:
        report.params['alpha'] = alpha
        candidates.append(FamilySpec.of('scriptH', n=n, alpha=alpha))
    compare(report, f, candidates)
    settle(report, candidates)
    if scope == 'reduced' and report.status == 'pass':
        report.set_status('reduced')
    return _finish(report, start)


def certify_unicyclic_near_half(n: int, threads: int = 1, progress: bool = False) -> SearchReport:
    """
    Nonbipartite unicyclic graphs of odd order n with γ = (n-1)/2, and their girth 3
    subfamily: both minima must sit on the triangle comb with alpha = (n-3)/2.

    :raises: TypeError, ValueError
    """
    _check_order(n, 5, 13, odd=True)
    start = time.perf_counter()
    logger.info("suite unicyclic-near-half n=%d", n)
    expected = FamilySpec.of('scriptH', n=n, alpha=(n - 3) // 2)
    candidates = [expected, FamilySpec.of('scriptH', n=n, alpha=(n - 1) // 2)]
    f = GraphFilter(order=n, nonbipartite=True, unicyclic=True, gamma=(n - 1) // 2)
    report = scan_report('unicyclic-near-half', {'n': n}, f, scan(f, threads, progress))
    compare(report, f, candidates)
    settle(report, [expected])
    triangle = GraphFilter(order=n, nonbipartite=True, unicyclic=True, gamma=(n - 1) // 2, girth=3)
    sub = scan_report('unicyclic-near-half/girth-3', {'n': n, 'girth': 3}, triangle, scan(triangle, threads, progress))
    compare(sub, triangle, candidates)
    settle(sub, [expected])
    report.subscans.append(sub)
    if sub.status == 'fail':
        report.set_status('fail')
    return _finish(report, start)


def low_domination_candidate(n: int, gamma_value: int) -> Optional[FamilySpec]:
    if n in (3 * gamma_value - 1, 3 * gamma_value, 3 * gamma_value + 1):
        return FamilySpec.of('c3star', n=n, k=n - 4)
    if n >= 3 * gamma_value + 2:
        return FamilySpec.of('c3star', n=n, k=3 * gamma_value - 3)
    return None


def certify_low_domination(n: int, threads: int = 1, progress: bool = False) -> SearchReport:
    """
    Connected nonbipartite graphs of order n with γ <= (n+1)/3, one scan per γ: each
    minimum must sit on the triangle with a path and a pendant star chosen by n against 3γ.

    :raises: TypeError, ValueError
    """
    _check_order(n, 4, 9)
    start = time.perf_counter()
    logger.info("suite low-domination n=%d", n)
    top = (n + 1) // 3
    union = GraphFilter(order=n, nonbipartite=True, gamma_max=top)
    merged = ScanResult()
    subscans = []
    for gamma_value in range(1, top + 1):
        f = GraphFilter(order=n, nonbipartite=True, gamma=gamma_value)
        result = scan(f, threads, progress)
        merged.merge(result)
        sub = scan_report('low-domination/gamma-{}'.format(gamma_value), {'n': n, 'gamma': gamma_value}, f, result)
        candidate = low_domination_candidate(n, gamma_value)
        candidates = [candidate] if candidate is not None else []
        compare(sub, f, candidates)
        settle(sub, candidates)
        subscans.append(sub)
    report = scan_report('low-domination', {'n': n}, union, merged)
    report.subscans = subscans
    if any(sub.status == 'fail' for sub in subscans):
        report.set_status('fail')
    elif report.status != 'empty-domain':
        report.set_status('pass')
    return _finish(report, start)


# ====================
# STRUCTURE SUITE
# ====================
def f_graph_plans(max_order: int, girths: Iterable[int]) -> Iterator[tuple[int, int, dict[int, int]]]:
    """
    Attachment plans (g, l, {label: pendants}) with at most one pendant on every
    lollipop vertex but v(g+l-1), which takes any number, and order <= max_order
    """
    for g in girths:
        for l in range(1, max_order - g + 1):
            inner = g + l - 2
            budget = max_order - g - l
            for singles in range(0, min(inner, budget) + 1):
                for chosen in combinations(range(1, inner + 1), singles):
                    for extra in range(0, budget - singles + 1):
                        plan = {v: 1 for v in chosen}
                        if extra:
                            plan[g + l - 1] = extra
                        yield g, l, plan


def f_structure_outcome(member: FamilyGraph, g: int, l: int) -> tuple[int, CheckOutcome]:
    """Count f of cycle vertices that are not p-dominators, and whether the f clauses hold"""
    graph = member.graph
    supports = p_dominators(graph)
    free = [v for v in range(g) if v not in supports]
    f = len(free)
    if f == g:
        if g == 5:
            return f, CheckOutcome.ok()
        return f, CheckOutcome.failed("every cycle vertex is free and g={}".format(g))
    if f > 3 or f == 2:
        return f, CheckOutcome.failed("f={} with g={}".format(f, g))
    if f == 3:
        triples = [{(c - 1) % g, c, c + 1} for c in range(g - 1)]
        if set(free) not in triples:
            return f, CheckOutcome.failed("free cycle vertices {} are not v(i-1), v(i), v(i+1) with i < g".format(
                [v + 1 for v in free]))
        inner = [v for v in range(g, g + l - 1) if v not in supports]
        if inner:
            return f, CheckOutcome.failed("path vertices {} are not p-dominators".format([v + 1 for v in inner]))
    return f, CheckOutcome.ok()


def certify_f_graph_structure(max_order: int = 12, girths: Iterable[int] = (5, 7, 9, 11),
                              progress: bool = False) -> SearchReport:
    """
    Every lollipop with single pendants (several on the last path support) of odd
    order n, girth >= 5 and γ = (n-1)/2 must satisfy the f clauses.

    :raises: TypeError, ValueError
    """
    _check_order(max_order, 6, 14)
    girths = tuple(girths)
    for g in girths:
        if g < 5 or g % 2 == 0:
            raise ValueError("girths must be odd and at least 5, got {}".format(g))
    start = time.perf_counter()
    logger.info("suite f-structure max_order=%d girths=%s", max_order, girths)
    tally = BatteryTally('f-clauses')
    seen: set[CanonicalForm] = set()
    plans = 0
    histogram: dict[int, int] = {}
    for g, l, plan in tqdm(f_graph_plans(max_order, girths), desc='f-structure', unit='plan',
                           disable=not progress, leave=False):
        member = f_graph(g, l, plan)
        n = member.graph.order
        if n % 2 == 0:
            continue
        form = canonical_form(member.graph)
        if form in seen:
            continue
        seen.add(form)
        plans += 1
        if gamma(member.graph) != (n - 1) // 2:
            continue
        f, outcome = f_structure_outcome(member, g, l)
        histogram[f] = histogram.get(f, 0) + 1
        tally.record(outcome, member.spec.text)
    report = SearchReport(suite='f-structure', params={'max_order': max_order, 'girths': list(girths)},
                          description="nonbipartite pendant lollipops, girth >= 5, odd n <= {}, gamma = (n-1)/2"
                          .format(max_order), count=tally.total, tolerance=Config.active_tolerances())
    report.batteries.append(tally)
    report.notes.append("{} distinct odd-order classes generated".format(plans))
    report.notes.append("f histogram: {}".format(", ".join("f={}: {}".format(k, histogram[k])
                                                            for k in sorted(histogram))))
    if tally.total == 0:
        report.set_status('empty-domain')
    elif tally.failed:
        report.set_status('fail')
    return _finish(report, start)


# ====================
# PRELIMINARY BATTERIES
# ====================
def _label(g: Graph) -> str:
    return graph6_encode(g)


def _connected_upto(limit: int, low: int = 1) -> Iterator[Graph]:
    for n in range(low, limit + 1):
        yield from connected_graphs(n)


def battery_bipartite_law(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('bipartite_law')
    for g in _connected_upto(limit):
        exact = bool(is_bipartite(g))
        tally.check(is_spectrally_bipartite(g) == exact, _label(g), "bipartite={} disagrees with q_min".format(exact))
    return [tally]


def battery_mindeg(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('mindeg')
    for g in _connected_upto(limit, 2):
        tally.record(check_qmin_below_mindeg(g), _label(g))
    return [tally]


def battery_interlacing(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('interlacing')
    for g in _connected_upto(limit, 2):
        for edge in g.edges():
            tally.record(check_interlacing(g, edge), "{} edge {}".format(_label(g), edge))
    return [tally]


def battery_witness(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('witness')
    for g in _connected_upto(limit, 3):
        if is_bipartite(g):
            continue
        try:
            h = spanning_unicyclic_witness(g)
        except WitnessNotFoundError as e:
            tally.check(False, _label(g), str(e))
            continue
        subgraph = all(g.has_edge(u, v) for u, v in h.edges())
        same = is_unicyclic(h) and odd_girth(h) == odd_girth(g) and gamma(h) == gamma(g)
        tally.check(subgraph and same, _label(g), "witness {} is not valid".format(_label(h)))
    return [tally]


def battery_pendants(limit: int) -> list[BatteryTally]:
    supports_tally = BatteryTally('pendants_supports')
    forced_tally = BatteryTally('pendants_forced')
    for g in _connected_upto(limit, 3):
        pendants = pendant_vertices(g)
        if not pendants:
            continue
        label = _label(g)
        best = gamma(g)
        constrained = minimal_dominating_set_avoiding_pendants(g).gamma
        supports_tally.check(constrained == best, label, "constrained gamma {} != {}".format(constrained, best))
        for v in p_dominators(g):
            leaves = pendant_neighbors(g, v)
            if len(leaves) < 2:
                continue
            without = domination_number(g, exclude=[v]).gamma
            forced_tally.check(without > best, label, "gamma without {} stays {}".format(v, without))
            for p in leaves:
                with_leaf = domination_number(g, include=[p]).gamma
                forced_tally.check(with_leaf > best, label, "gamma with pendant {} stays {}".format(p, with_leaf))
    return [supports_tally, forced_tally]


def battery_corona(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('corona')
    for g in _connected_upto(limit, 2):
        half = 2 * gamma(g) == g.order
        tally.check(half == corona_characterization(g), _label(g), "gamma = n/2 is {}".format(half))
    family = BatteryTally('corona_formula')
    for base, low in (('path', 1), ('cycle', 3), ('complete', 1)):
        for size in range(low, limit // 2 + 1):
            member = build(FamilySpec.of('corona', base=base, n=size))
            family.check(gamma(member.graph) == gamma_formula(member.spec), member.spec.text)
    return [tally, family]


def battery_ore(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('ore')
    for g in _connected_upto(limit, 2):
        tally.check(gamma(g) <= ore_bound(g.order), _label(g))
    return [tally]


def _formula_tally(name: str, specs: Iterable[FamilySpec]) -> BatteryTally:
    tally = BatteryTally(name)
    for spec in specs:
        member = build(spec)
        solved, predicted = gamma(member.graph), gamma_formula(spec)
        tally.check(solved == predicted, spec.text, "solver {} != formula {}".format(solved, predicted))
    return tally


def battery_path_cycle(limit: int) -> list[BatteryTally]:
    specs = [FamilySpec.of('path', n=n) for n in range(1, limit + 1)]
    specs += [FamilySpec.of('cycle', n=n) for n in range(3, limit + 1)]
    return [_formula_tally('path_cycle', specs)]


def battery_cycle_spectra(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('cycle_spectra')
    tol = Config.tolerance('eigen')
    for n in range(3, limit + 1):
        measured = sorted(q_spectrum(build(FamilySpec.of('cycle', n=n)).graph))
        closed = sorted(2 + 2 * math.cos(2 * math.pi * k / n) for k in range(n))
        worst = max(abs(a - b) for a, b in zip(measured, closed))
        tally.check(worst <= tol, "C{}".format(n), "deviation {:.3g}".format(worst))
    return [tally]


def battery_sunlike(limit: int) -> list[BatteryTally]:
    specs = [FamilySpec.of('sunlike', g=g, k=k) for g in range(3, limit + 1) for k in range(0, g + 1)]
    return [_formula_tally('sunlike', specs)]


def battery_comb(limit: int) -> list[BatteryTally]:
    specs = [FamilySpec.of('scriptH', n=n, alpha=alpha)
             for n in range(3, limit + 1) for alpha in range(0, n // 2 + 1) if script_h_realizable(n, alpha)]
    return [_formula_tally('comb', specs)]


def battery_packed(limit: int) -> list[BatteryTally]:
    specs = []
    for eps in range(3, limit + 1):
        for k in range(0, eps - 1):
            if eps == 3 and k:
                continue
            specs.append(FamilySpec.of('h2', eps=eps, k=k))
            if k >= 1 and eps > 3:
                specs.append(FamilySpec.of('h4', eps=eps, k=k))
            if k >= 2 and eps - k - 1 >= 3 and (eps - k - 4) % 3 == 0:
                specs.append(FamilySpec.of('h5', eps=eps, k=k))
    return [_formula_tally('packed', specs)]


def battery_h_relations(limit: int) -> list[BatteryTally]:
    spread = BatteryTally('h1_below_h2')
    moved = BatteryTally('h2_below_h3')
    for eps in range(4, limit + 1):
        for k in range(1, eps - 1):
            packed = gamma(triangle_path_family('h2', eps, k).graph)
            for positions in combinations(range(1, eps - 1), k):
                spread_gamma = gamma(triangle_path_family('h1', eps, k, positions).graph)
                spread.check(spread_gamma <= packed, "h1 eps={} k={} a={}".format(eps, k, positions),
                             "{} > {}".format(spread_gamma, packed))
            for s in (2, 3):
                base = gamma(triangle_path_family('h2', eps, k, s=s).graph)
                other = gamma(triangle_path_family('h3', eps, k, s=s).graph)
                moved.check(base <= other, "h3 eps={} k={} s={}".format(eps, k, s), "{} > {}".format(base, other))
    return [spread, moved]


def _random_sunlike(rng: np.random.Generator) -> tuple[Graph, int, int]:
    g = int(rng.integers(3, 13))
    k = int(rng.integers(1, g + 1))
    hosts = sorted(int(v) for v in rng.choice(g, size=k, replace=False))
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for v in hosts:
        for _ in range(int(rng.integers(1, 3))):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges), g, k


def battery_random_sunlike(count: int, seed: int) -> list[BatteryTally]:
    tally = BatteryTally('random_sunlike')
    rng = np.random.default_rng(seed)
    for _ in range(count):
        g, girth_value, k = _random_sunlike(rng)
        bound = k + -(-(girth_value - k - 2) // 3)
        tally.check(gamma(g) <= bound, _label(g), "gamma above {}".format(bound))
    return [tally]


def _structure_tallies() -> dict[str, BatteryTally]:
    names = ('unicyclic_signs', 'tree_monotone', 'zero_branch', 'odd_cycle_symmetry', 'triangle_attachment_max')
    return {name: BatteryTally(name) for name in names}


def structure_checks(g: Graph, tallies: dict[str, BatteryTally]) -> None:
    """Every eigenvector-structure validator that applies to the unicyclic graph g"""
    label = _label(g)
    result = q_min(g)
    runs: list[tuple[str, Callable[[], CheckOutcome], str]] = [
        ('unicyclic_signs', lambda: validate_unicyclic_signs(g, result), label),
        ('odd_cycle_symmetry', lambda: validate_odd_cycle_symmetry(g, result), label),
        ('triangle_attachment_max', lambda: validate_triangle_attachment_max(g, result), label),
    ]
    for root in unique_cycle(g):
        if g.degree(root) < 3:
            continue
        where = "{} root {}".format(label, root)
        runs.append(('tree_monotone', lambda r=root: validate_tree_monotone(g, result, r), where))
        runs.append(('zero_branch', lambda r=root: validate_zero_branch(g, result, r), where))
    for name, run, where in runs:
        try:
            tallies[name].record(run(), where)
        except ShapeError:
            # not applicable to this shape
            continue


def _random_f_graph(rng: np.random.Generator) -> FamilyGraph:
    g = int(rng.choice([3, 5, 7, 9]))
    l = int(rng.integers(1, 5))
    plan = {v: int(rng.integers(0, 2)) for v in range(1, g + l - 1)}
    plan[g + l - 1] = int(rng.integers(0, 3))
    return f_graph(g, l, plan)


def battery_structure(limit: int, random_count: int, seed: int) -> list[BatteryTally]:
    tallies = _structure_tallies()
    for n in range(3, limit + 1):
        for g in unicyclic_nonbipartite(n):
            structure_checks(g, tallies)
    rng = np.random.default_rng(seed + 1)
    for _ in range(random_count):
        structure_checks(_random_f_graph(rng).graph, tallies)
    return list(tallies.values())


def relocation_trees() -> list[tuple[str, Graph, int]]:
    path2 = Graph.from_edges(2, [(0, 1)])
    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    return [('P2', path2, 0), ('P3 end', path3, 0), ('P3 center', path3, 1), ('K1,3 center', star, 0)]


def battery_relocation(limit: int) -> list[BatteryTally]:
    tally = BatteryTally('relocation')
    for g1 in _connected_upto(limit, 3):
        if is_bipartite(g1):
            continue
        for name, tree, u in relocation_trees():
            for v1 in g1.vertices():
                for v2 in g1.vertices():
                    if v1 != v2:
                        tally.record(check_tree_relocation(g1, v1, v2, tree, u),
                                     "{} {} {}->{}".format(_label(g1), name, v2, v1))
    return [tally]


def batteries(limits: dict[str, int]) -> list[tuple[str, Callable[[], list[BatteryTally]]]]:
    """
    Enum-like list of every preliminary battery with its limit bound in

    :return: (name, runner) pairs in execution order
    """
    seed = limits['seed']
    return [
        ('bipartite_law', lambda: battery_bipartite_law(limits['bipartite_law'])),
        ('mindeg', lambda: battery_mindeg(limits['mindeg'])),
        ('interlacing', lambda: battery_interlacing(limits['interlacing'])),
        ('witness', lambda: battery_witness(limits['witness'])),
        ('pendants', lambda: battery_pendants(limits['pendants'])),
        ('corona', lambda: battery_corona(limits['corona'])),
        ('ore', lambda: battery_ore(limits['ore'])),
        ('path_cycle', lambda: battery_path_cycle(limits['path_cycle'])),
        ('cycle_spectra', lambda: battery_cycle_spectra(limits['cycle_spectra'])),
        ('sunlike', lambda: battery_sunlike(limits['sunlike'])),
        ('comb', lambda: battery_comb(limits['comb'])),
        ('packed', lambda: battery_packed(limits['packed'])),
        ('h_relations', lambda: battery_h_relations(limits['h_relations'])),
        ('random_sunlike', lambda: battery_random_sunlike(limits['random_sunlike'], seed)),
        ('structure', lambda: battery_structure(limits['structure'], limits['random_families'], seed)),
        ('relocation', lambda: battery_relocation(limits['relocation'])),
    ]


def certify_preliminaries(limits: Optional[dict[str, int]] = None, only: Optional[Iterable[str]] = None,
                          progress: bool = False) -> SearchReport:
    """
    Runs the exhaustive and seeded-random batteries and aggregates their tallies.

    :param limits: overrides of Config.battery_limits()
    :type limits: dict(str, int)

    :param only: battery names to run, all when None
    :type only: iterable(str)

    :raises: ValueError
    """
    merged = Config.battery_limits()
    merged.update(Config.check_batteries(dict(limits or {})))
    runners = batteries(merged)
    if only is not None:
        wanted = set(only)
        unknown = wanted - {name for name, _ in runners}
        if unknown:
            raise ValueError("Unknown batteries: {}".format(", ".join(sorted(unknown))))
        runners = [(name, runner) for name, runner in runners if name in wanted]
    start = time.perf_counter()
    logger.info("suite preliminaries: %s", ", ".join(name for name, _ in runners))
    report = SearchReport(suite='preliminaries', params={'limits': merged}, description="invariant batteries",
                          tolerance=Config.active_tolerances())
    for name, runner in tqdm(runners, desc='preliminaries', unit='battery', disable=not progress, leave=False):
        logger.debug("battery %s", name)
        report.batteries.extend(runner())
    report.count = sum(t.total for t in report.batteries)
    failed = [t.name for t in report.batteries if t.failed]
    if failed:
        report.notes.append("failing batteries: {}".format(", ".join(failed)))
        report.set_status('fail')
    return _finish(report, start)


suite_theorem_1_1 = certify_near_half_domination
suite_theorem_1_2 = certify_short_odd_girth
suite_theorem_4_4_and_4_7 = certify_unicyclic_near_half
suite_lemma_2_11 = certify_low_domination
suite_theorem_3_2 = certify_f_graph_structure


# ====================
# REGISTRY
# ====================
def _need(value: Optional[int], name: str) -> int:
    if value is None:
        raise ValueError("This suite needs --{}".format(name))
    return value


def implemented_suites() -> dict[str, Callable[[Config], SearchReport]]:
    """
    Enum-like instance mapping every suite name to its runner

    > implemented_suites()[config.suite](config)

    :return: Pointer to suite runner
    """
    suites = {
        'near-half': lambda c: certify_near_half_domination(_need(c.n, 'n'), c.threads, c.progress),
        'odd-girth': lambda c: certify_short_odd_girth(_need(c.n, 'n'), _need(c.gamma, 'gamma'),
                                                       c.threads, c.progress),
        'unicyclic-near-half': lambda c: certify_unicyclic_near_half(_need(c.n, 'n'), c.threads, c.progress),
        'low-domination': lambda c: certify_low_domination(_need(c.n, 'n'), c.threads, c.progress),
        'f-structure': lambda c: certify_f_graph_structure(c.n if c.n is not None else 12, progress=c.progress),
        'preliminaries': lambda c: certify_preliminaries(c.batteries, progress=c.progress),
    }
    suites.update({alias: suites[name] for alias, name in Config.suite_aliases().items()})
    return suites
