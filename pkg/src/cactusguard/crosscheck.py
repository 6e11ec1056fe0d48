"""Cross-module verification harness and benchmark runner."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, Optional

from .decomposition import cactus_upper_bound
from .graph import Graph, GraphKind, classify
from .oracle import GameVariant, domination_number, exact_number
from .reduction import meden_christmas_cactus
from .generator import GeneratorSpec, generate


@dataclass
class Relation:
    name: str
    holds: bool
    detail: str


@dataclass
class CrosscheckReport:
    kind: str
    gamma: int
    egc: int
    edn: int
    ede: int
    meden: Optional[int] = None
    bound: Optional[int] = None
    relations: List[Relation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.relations)


def crosscheck(g: Graph, budget: int = 10**7) -> CrosscheckReport:
    """Compute every applicable number for g and check the relations the
    theory promises between them."""
    cls = classify(g)
    gamma = domination_number(g)
    egc = exact_number(g, GameVariant.EGC, budget=budget)
    edn = exact_number(g, GameVariant.EDN, budget=budget)
    ede = exact_number(g, GameVariant.EDE, budget=budget)
    report = CrosscheckReport(kind=cls.kind.value, gamma=gamma, egc=egc, edn=edn, ede=ede)
    rel = report.relations.append
    rel(Relation("gamma <= EGC <= EDN <= EDE", gamma <= egc <= edn <= ede,
                 "%d <= %d <= %d <= %d" % (gamma, egc, edn, ede)))
    if cls.kind is GraphKind.CHRISTMAS_CACTUS:
        meden, _ = meden_christmas_cactus(g, want_trace=False)
        report.meden = meden
        rel(Relation("EGC = EDN = EDE on Christmas cacti", egc == edn == ede,
                     "%d, %d, %d" % (egc, edn, ede)))
        rel(Relation("meden equals the oracle numbers", meden == edn,
                     "meden %d vs oracle %d" % (meden, edn)))
    if cls.kind in (GraphKind.CACTUS, GraphKind.CHRISTMAS_CACTUS):
        bound = cactus_upper_bound(g)
        report.bound = bound
        rel(Relation("cactus upper bound >= EDN", bound >= edn, "%d >= %d" % (bound, edn)))
        if cls.kind is GraphKind.CHRISTMAS_CACTUS:
            rel(Relation("bound degenerates to meden", bound == report.meden,
                         "%d == %s" % (bound, report.meden)))
    return report


@dataclass
class BenchRow:
    n: int
    build_seconds: float
    solve_seconds: float
    guards: int


def bench(sizes, seed: int = 0, cycle_ratio: float = 0.6, max_cycle: int = 12) -> List[BenchRow]:
    """Wall time of the linear solver on generated Christmas cacti."""
    rows = []
    for i, n in enumerate(sizes):
        t0 = time.perf_counter()
        g = generate(GeneratorSpec(n=n, cycle_ratio=cycle_ratio, max_cycle=max_cycle, christmas=True, seed=seed + i))
        t1 = time.perf_counter()
        guards, _ = meden_christmas_cactus(g, want_trace=False)
        t2 = time.perf_counter()
        rows.append(BenchRow(n=n, build_seconds=t1 - t0, solve_seconds=t2 - t1, guards=guards))
    return rows


def doubling_ratios(rows: List[BenchRow]) -> List[float]:
    out = []
    for a, b in zip(rows, rows[1:]):
        if b.n == 2 * a.n and a.solve_seconds > 0:
            out.append(b.solve_seconds / a.solve_seconds)
    return out
