"""Verification suites: each turns one structural claim into an exhaustive run over a corpus."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import graph as G
from .corpus import clebsch_subsets, exhaustive_cap, exhaustive_graphs, graph6_stream
from .divisibility import (
    NotDivisible,
    check_diamond_corollary,
    divisible_coloring,
    is_perfectly_divisible_structural,
)
from .graph import Graph, to_graph6
from .oracles import (
    admits_division,
    chromatic_number,
    clique_number,
    is_k_vertex_critical,
    is_perfect,
    is_perfect_definitional,
    is_perfectly_divisible_bruteforce,
)
from .patterns import (
    FULL,
    TRIPLE,
    TWO_APART,
    classify_hole_attachment,
    find_hole,
    find_induced,
    is_dominating,
    is_free,
    iter_holes,
)
from .structure import classify, color_le4, named, peel, verify_certificate


@dataclass
class RunReport:
    suite: str
    graphs_tested: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, g: Graph, prop: str) -> None:
        self.violations.append((to_graph6(g), prop))

    def lines(self) -> list[str]:
        out = [f"suite {self.suite}: graphs={self.graphs_tested} "
               f"violations={len(self.violations)} elapsed={self.elapsed:.1f}s"]
        out += [f"  {note}" for note in self.notes]
        out += [f"violation {prop} {g6}" for g6, prop in self.violations]
        return out


@dataclass
class SuiteOptions:
    max_n: int | None = None          # exhaustive cap; None means the configured default
    clebsch: bool = True              # include induced subgraphs of the Clebsch graph
    unique: bool | None = None        # None: the suite's own default
    extra: Iterable[str] = ()         # graph6 lines appended to the corpus

    def cap(self) -> int:
        return exhaustive_cap() if self.max_n is None else self.max_n


def _corpus(opts: SuiteOptions, filters: tuple[str, ...], connected: bool, unique_default: bool,
            clebsch_max: int = 16, extra_max: int = G.MAX_VERTICES) -> Iterator[Graph]:
    unique = unique_default if opts.unique is None else opts.unique
    yield from exhaustive_graphs(opts.cap(), filters, connected, unique)
    if opts.clebsch:
        # every induced subgraph of the Clebsch graph is (P2 u P4, triangle)-free
        for _, g in clebsch_subsets(filters, connected, unique, max_n=clebsch_max):
            yield g
    pats = [named(f) for f in filters]
    for _, g in graph6_stream(opts.extra):
        if g.n > extra_max or (connected and not G.is_connected(g)) or not is_free(g, pats):
            continue
        yield g


TRIANGLE_FREE_CLASS = ("p2p4", "c3")
BULL_FREE_CLASS = ("p2p4", "bull")


# -- structure suites ---------------------------------------------------------

def suite_theorem2(opts: SuiteOptions) -> RunReport:
    rep = RunReport("theorem2")
    cases: Counter[str] = Counter()
    for g in _corpus(opts, TRIANGLE_FREE_CLASS, True, False):
        rep.graphs_tested += 1
        cert = classify(g, check=False)
        cases[cert.tag] += 1
        if not verify_certificate(g, cert):
            rep.fail(g, "theorem2.certificate")
        col = color_le4(g, check=False)
        if not col.is_proper(g) or col.count > 4:
            rep.fail(g, "chi.color-le4-proper")
        elif col.count != chromatic_number(g):
            rep.fail(g, "chi.color-le4-exact")
    rep.notes.append("cases " + " ".join(f"{k}={cases[k]}" for k in sorted(cases)))
    return rep


def suite_corollary3(opts: SuiteOptions) -> RunReport:
    rep = RunReport("corollary3")
    f1, f2 = named("grotzsch"), named("clebsch")
    by_chi: Counter[int] = Counter()
    for g in _corpus(opts, TRIANGLE_FREE_CLASS, True, False):
        rep.graphs_tested += 1
        chi = chromatic_number(g)
        by_chi[chi] += 1
        has_f1 = g.n >= f1.n and find_induced(g, f1) is not None
        if chi == 4:
            if not has_f1:
                rep.fail(g, "corollary3.chi4-contains-f1")
            core = peel(g).core
            if find_induced(core, f1) is None or find_induced(f2, core) is None:
                rep.fail(g, "corollary3.chi4-core")
        odd_hole = find_hole(g, 5) is not None or find_hole(g, 7) is not None
        if (chi == 3) != (odd_hole and not has_f1):
            rep.fail(g, "corollary3.chi3-iff")
    rep.notes.append("chromatic " + " ".join(f"chi{k}={by_chi[k]}" for k in sorted(by_chi)))
    return rep


def suite_corollary4(opts: SuiteOptions) -> RunReport:
    rep = RunReport("corollary4")
    classes: list[Graph] = []
    found = 0
    for g in _corpus(opts, TRIANGLE_FREE_CLASS, True, False):
        rep.graphs_tested += 1
        if g.n < 4 or not is_k_vertex_critical(g, 4):
            continue
        found += 1
        if not any(h.n == g.n and find_induced(h, g) is not None for h in classes):
            classes.append(g)
    f1 = named("grotzsch")
    rep.notes.append(f"4-vertex-critical graphs={found} isomorphism-classes={len(classes)}")
    for h in classes:
        if not (h.n == f1.n and find_induced(h, f1) is not None):
            rep.fail(h, "corollary4.not-grotzsch")
    if len(classes) != 1:
        rep.violations.append((to_graph6(f1), f"corollary4.class-count={len(classes)}"))
    return rep


# -- lemma suites -------------------------------------------------------------

def suite_lemma_c5(opts: SuiteOptions) -> RunReport:
    rep = RunReport("lemma-c5")
    holes = 0
    for g in _corpus(opts, BULL_FREE_CLASS, True, True):
        rep.graphs_tested += 1
        bad = False
        for v in range(g.n):
            for hole in iter_holes(g, 5, within=g.non_neighbors(v)):
                holes += 1
                for x in G.iter_bits(g.adj[v]):
                    if classify_hole_attachment(g, hole, x).kind not in (TWO_APART, FULL):
                        bad = True
        if bad:
            rep.fail(g, "lemma-c5.attachment")
    rep.notes.append(f"5-holes in non-neighbourhoods checked={holes}")
    return rep


def suite_lemma_c7(opts: SuiteOptions) -> RunReport:
    rep = RunReport("lemma-c7")
    holes = 0
    for g in _corpus(opts, BULL_FREE_CLASS, True, True):
        rep.graphs_tested += 1
        for hole in iter_holes(g, 7):
            cmask = G.mask_of(hole)
            outside = g.full & ~cmask
            if any(g.adj[x] & cmask == cmask for x in G.iter_bits(outside)):
                continue
            holes += 1
            if not is_dominating(g, cmask):
                rep.fail(g, "lemma-c7.dominating")
            for x in G.iter_bits(g.set_neighbors(cmask)):
                if classify_hole_attachment(g, hole, x).kind not in (TWO_APART, TRIPLE):
                    rep.fail(g, "lemma-c7.attachment")
                    break
    rep.notes.append(f"7-holes without a complete vertex checked={holes}")
    return rep


# -- divisibility suites ------------------------------------------------------

def f1_join(k: int) -> Graph:
    return G.join(named("grotzsch"), G.complete(k))


def suite_theorem5(opts: SuiteOptions, joins: Iterable[int] = (1, 2, 3), join_limit: int = 14) -> RunReport:
    rep = RunReport("theorem5")
    f1 = named("grotzsch")
    for g in _corpus(opts, BULL_FREE_CLASS, False, True, clebsch_max=10, extra_max=10):
        rep.graphs_tested += 1
        brute = is_perfectly_divisible_bruteforce(g).divisible
        if brute != is_perfectly_divisible_structural(g, check=False):
            rep.fail(g, "theorem5.agreement")
    if opts.clebsch:
        # larger Clebsch subgraphs: divisible iff F1-free, non-divisibility witnessed by the F1 copy
        for _, g in clebsch_subsets(unique=True, min_n=11):
            rep.graphs_tested += 1
            emb = find_induced(g, f1)
            if emb is None:
                try:
                    divisible_coloring(g)
                except NotDivisible:
                    rep.fail(g, "theorem5.clebsch-f1-free-divisible")
            elif admits_division(G.induced(g, G.mask_of(emb))):
                rep.fail(g, "theorem5.clebsch-f1-witness")
    report = is_perfectly_divisible_bruteforce(f1)
    rep.graphs_tested += 1
    if report.divisible or report.witness_failure != f1.full:
        rep.fail(f1, "theorem5.f1-not-divisible")
    for k in joins:
        g = f1_join(k)
        rep.graphs_tested += 1
        if not is_free(g, [named("p2p4"), named("bull")]):
            rep.fail(g, f"theorem5.join-k{k}-class")
        if clique_number(g) != k + 2:
            rep.fail(g, f"theorem5.join-k{k}-omega")
        if is_perfectly_divisible_bruteforce(g, limit=join_limit).divisible:
            rep.fail(g, f"theorem5.join-k{k}-divisible")
        if is_perfectly_divisible_structural(g):
            rep.fail(g, f"theorem5.join-k{k}-structural")
    return rep


def suite_corollary6(opts: SuiteOptions) -> RunReport:
    rep = RunReport("corollary6")
    f1 = named("grotzsch")
    worst = 0
    for g in _corpus(opts, BULL_FREE_CLASS, False, True):
        if g.n >= f1.n and find_induced(g, f1) is not None:
            continue
        rep.graphs_tested += 1
        try:
            dc = divisible_coloring(g)
        except NotDivisible:
            rep.fail(g, "corollary6.not-divisible")
            continue
        if not dc.coloring.is_proper(g):
            rep.fail(g, "corollary6.improper")
        elif dc.coloring.count > dc.layer_bound:
            rep.fail(g, "corollary6.bound")
        worst = max(worst, dc.coloring.count)
    rep.notes.append(f"largest color count used={worst}")
    return rep


def suite_corollary8_9(opts: SuiteOptions) -> RunReport:
    rep = RunReport("corollary8-9")
    cases: Counter[str] = Counter()
    for g in _corpus(opts, BULL_FREE_CLASS + ("diamond",), True, True):
        rep.graphs_tested += 1
        dr = check_diamond_corollary(g, check=False)
        cases[dr.case] += 1
        if dr.case == "corollary-violation":
            rep.fail(g, "corollary8.no-case")
        if not dr.chi_bound_holds:
            rep.fail(g, "corollary9.chi-bound")
    rep.notes.append("cases " + " ".join(f"{k}={cases[k]}" for k in sorted(cases)))
    return rep


# -- oracle and I/O suites ----------------------------------------------------

def suite_spgt_cross(opts: SuiteOptions) -> RunReport:
    rep = RunReport("spgt-cross")
    perfect = 0
    for g in _corpus(opts, (), False, True, clebsch_max=0, extra_max=8):
        rep.graphs_tested += 1
        a = is_perfect(g)
        perfect += a
        if a != is_perfect_definitional(g):
            rep.fail(g, "spgt.agreement")
    rep.notes.append(f"perfect={perfect}")
    return rep


def suite_roundtrip(opts: SuiteOptions) -> RunReport:
    rep = RunReport("roundtrip")
    unique = False if opts.unique is None else opts.unique
    stream = exhaustive_graphs(opts.cap(), unique=unique)
    extra = (g for _, g in graph6_stream(opts.extra))
    for src in (stream, extra):
        for g in src:
            rep.graphs_tested += 1
            if G.parse_graph6(to_graph6(g)) != g:
                rep.fail(g, "roundtrip.graph6")
    return rep


SUITES: dict[str, Callable[[SuiteOptions], RunReport]] = {
    "theorem2": suite_theorem2,
    "corollary3": suite_corollary3,
    "corollary4": suite_corollary4,
    "lemma-c5": suite_lemma_c5,
    "lemma-c7": suite_lemma_c7,
    "theorem5": suite_theorem5,
    "corollary6": suite_corollary6,
    "corollary8-9": suite_corollary8_9,
    "spgt-cross": suite_spgt_cross,
    "roundtrip": suite_roundtrip,
}


def run_suite(name: str, opts: SuiteOptions | None = None) -> RunReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    start = time.perf_counter()
    rep = SUITES[name](opts or SuiteOptions())
    rep.elapsed = time.perf_counter() - start
    return rep
