# -*- coding: utf-8 -*-
#
"""

This file contains the report records produced by searches and verification suites,
and their stable dictionary form

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from .spectral import CheckOutcome

logger = logging.getLogger(__name__)

MAX_SAMPLES = 5


def statuses() -> list[str]:
    return ['pass', 'fail', 'reduced', 'empty-domain']


def rounded(value: Any) -> Any:
    """Floats cut to 12 significant digits, recursively through lists and dicts"""
    if isinstance(value, float):
        return float('{:.12g}'.format(value))
    if isinstance(value, dict):
        return {k: rounded(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [rounded(v) for v in value]
    return value


@dataclass(frozen=True)
class ArgminEntry(object):
    graph6: str
    canonical: str
    q: float
    family_match: Optional[str] = None

    def to_dict(self) -> dict:
        return {'graph6': self.graph6, 'canonical': self.canonical, 'q': self.q,
                'family_match': self.family_match}


@dataclass(frozen=True)
class Comparison(object):
    candidate: str
    q: Optional[float]
    delta: Optional[float]
    matches: bool
    in_domain: bool

    def to_dict(self) -> dict:
        return {'candidate': self.candidate, 'q': self.q, 'delta': self.delta,
                'matches': self.matches, 'in_domain': self.in_domain}


@dataclass
class BatteryTally(object):
    """Pass, fail and skip counts of one battery with a few failure samples"""

    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    samples: list[str] = field(default_factory=list)

    def record(self, outcome: CheckOutcome, label: str = '') -> None:
        if outcome.status == 'pass':
            self.passed += 1
        elif outcome.status == 'skip':
            self.skipped += 1
        else:
            self.failed += 1
            if len(self.samples) < MAX_SAMPLES:
                self.samples.append("{}: {}".format(label, outcome.detail) if label else outcome.detail)
            logger.warning("battery %s failed on %s: %s", self.name, label, outcome.detail)

    def check(self, condition: bool, label: str = '', detail: str = '') -> None:
        self.record(CheckOutcome.ok() if condition else CheckOutcome.failed(detail or 'check failed'), label)

    def merge(self, other: 'BatteryTally') -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.skipped += other.skipped
        self.samples.extend(other.samples[:MAX_SAMPLES - len(self.samples)])

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped

    def to_dict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'failed': self.failed,
                'skipped': self.skipped, 'samples': list(self.samples)}


@dataclass
class SearchReport(object):
    """
    Outcome of one scan or suite.

    qstar is the least q_min over the domain; argmin lists every class within the tie
    tolerance of it, sorted by canonical form.
    """

    suite: str
    params: dict = field(default_factory=dict)
    description: str = ''
    count: int = 0
    scope: str = 'full'
    tolerance: dict = field(default_factory=dict)
    qstar: Optional[float] = None
    argmin: list[ArgminEntry] = field(default_factory=list)
    comparisons: list[Comparison] = field(default_factory=list)
    runtime_ms: float = 0.0
    status: str = 'pass'
    notes: list[str] = field(default_factory=list)
    subscans: list['SearchReport'] = field(default_factory=list)
    batteries: list[BatteryTally] = field(default_factory=list)
    survivors: list[str] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return len(self.argmin) == 1

    @property
    def passed(self) -> bool:
        return self.status != 'fail'

    def set_status(self, status: str) -> None:
        if status not in statuses():
            raise ValueError("Invalid value for status parameter, must be one of: {}".format(", ".join(statuses())))
        self.status = status

    def graphs(self) -> list[str]:
        """graph6 lines for the graph6 export: survivors when collected, else the argmin"""
        if self.survivors:
            return list(self.survivors)
        found = [entry.graph6 for entry in self.argmin]
        for sub in self.subscans:
            found.extend(sub.graphs())
        return found

    def to_dict(self) -> dict:
        out = {
            'suite': self.suite,
            'params': dict(self.params),
            'domain': {'description': self.description, 'count': self.count, 'scope': self.scope},
            'tolerance': dict(self.tolerance),
            'qstar': self.qstar,
            'argmin': [entry.to_dict() for entry in self.argmin],
            'unique': self.unique,
            'comparisons': [c.to_dict() for c in self.comparisons],
            'runtime_ms': self.runtime_ms,
            'status': self.status,
            'notes': list(self.notes),
        }
        if self.subscans:
            out['subscans'] = [sub.to_dict() for sub in self.subscans]
        if self.batteries:
            out['batteries'] = [b.to_dict() for b in self.batteries]
        return rounded(out)
