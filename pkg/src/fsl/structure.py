"""Classification of connected (P2 u P4, C3)-free graphs with checkable certificates.

Every such graph has a comparable pair, or is 3-colorable, or contains the
Grötzsch graph F1 and sits inside the Clebsch graph F2.  This module finds
which, produces the witness, and turns the classification into a coloring
with at most four colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from . import graph as G
from .graph import Graph, induced, iter_bits, members
from .oracles import Coloring, is_k_colorable
from .patterns import (
    TWO_APART,
    SINGLETON,
    Embedding,
    classify_hole_attachment,
    comparable_pair_within,
    find_comparable_pair,
    find_violation,
    iter_holes,
    verify_embedding,
)


class ClassViolation(ValueError):
    """Input lies outside the class an operation is stated for."""

    def __init__(self, message: str, pattern: str | None = None, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.pattern = pattern
        self.witness = witness


class LabelingError(ValueError):
    """A structural claim failed while labelling a critical core."""

    def __init__(self, claim: str, detail: str):
        super().__init__(f"[{claim}] {detail}")
        self.claim = claim


@dataclass(frozen=True)
class ComparablePairCase:
    u: int
    v: int
    tag = "case-i"


@dataclass(frozen=True)
class ThreeColorableCase:
    coloring: Coloring
    tag = "case-ii"


@dataclass(frozen=True)
class CriticalCoreCase:
    f1_in_g: Embedding
    g_in_f2: Embedding
    tag = "case-iii"


Certificate = Union[ComparablePairCase, ThreeColorableCase, CriticalCoreCase]


@dataclass(frozen=True)
class PeelStack:
    removed: tuple[tuple[int, int], ...]   # (removed vertex, sponsor), original labels
    core: Graph
    core_map: tuple[int, ...]              # core vertex i is original vertex core_map[i]


@dataclass(frozen=True)
class StructureLabeling:
    """Pivot v of degree 5, its neighbours w[i] attached to hole[i] and hole[i+2],
    and the optional y[i] attached to hole[i] alone (indices mod 5)."""

    pivot: int
    w: tuple[int, ...]
    hole: tuple[int, ...]
    y: tuple[int | None, ...]

    @property
    def size(self) -> int:
        return 11 + sum(1 for x in self.y if x is not None)


# -- class membership ---------------------------------------------------------

@lru_cache(maxsize=None)
def named(name: str) -> Graph:
    return G.generate(name)


PATTERN_NAMES = ("p2p4", "c3")


def require_class(g: Graph, patterns: tuple[str, ...] = PATTERN_NAMES, connected: bool = False) -> None:
    hit = find_violation(g, [named(p) for p in patterns])
    if hit is not None:
        idx, emb = hit
        raise ClassViolation(f"graph contains {patterns[idx]} at {list(emb)}", patterns[idx], emb)
    if connected and not G.is_connected(g):
        comps = G.components(g)
        raise ClassViolation("graph is disconnected", "disconnected", tuple(members(comps[1])))


# -- peeling ------------------------------------------------------------------

def peel(g: Graph) -> PeelStack:
    """Delete the least comparable pair's dominated vertex until none is left."""
    alive = g.full
    removed = []
    while True:
        pair = comparable_pair_within(g, alive)
        if pair is None:
            break
        removed.append(pair)
        alive &= ~(1 << pair[0])
    return PeelStack(tuple(removed), induced(g, alive), tuple(members(alive)))


def replay(stack: PeelStack, core_colors: list[int], n: int) -> list[int]:
    """Extend a core coloring to the whole graph, giving each removed vertex its sponsor's color."""
    colors = [-1] * n
    for i, c in enumerate(core_colors):
        colors[stack.core_map[i]] = c
    for u, v in reversed(stack.removed):
        colors[u] = colors[v]
    return colors


# -- 3-coloring ---------------------------------------------------------------

def _two_coloring(g: Graph, s: int) -> dict[int, int] | None:
    side: dict[int, int] = {}
    for root in iter_bits(s):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in iter_bits(g.adj[x] & s):
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def three_color(g: Graph) -> Coloring | None:
    """A 3-coloring or None.

    Bipartite graphs get two colors.  Otherwise, for a maximum-degree vertex v
    whose neighbourhood is stable and whose non-neighbourhood is bipartite,
    color the non-neighbours with two colors, the neighbours with the third,
    and v with the first.  Failing that, an exact search decides.
    """
    if g.n == 0:
        return Coloring((), 0)
    side = _two_coloring(g, g.full)
    if side is not None:
        return Coloring.from_colors([side[v] for v in range(g.n)])
    degs = g.degrees()
    v = degs.index(max(degs))
    nv = g.adj[v]
    if not any(g.adj[u] & nv for u in iter_bits(nv)):
        side = _two_coloring(g, g.non_neighbors(v))
        if side is not None:
            colors = [2] * g.n
            for x, c in side.items():
                colors[x] = c
            colors[v] = 0
            return Coloring.from_colors(colors)
    return is_k_colorable(g, 3)


# -- labelling the critical core ----------------------------------------------

def extract_labeling(g: Graph, check: bool = True) -> StructureLabeling:
    """Label a core with no comparable pair and chromatic number 4 against the Clebsch frame."""
    if check:
        try:
            require_class(g, connected=True)
        except ClassViolation as exc:
            raise LabelingError("precondition", str(exc)) from exc
        pair = find_comparable_pair(g)
        if pair is not None:
            raise LabelingError("precondition", f"comparable pair {pair}")
        if three_color(g) is not None:
            raise LabelingError("precondition", "graph is 3-colorable")

    degs = g.degrees()
    top = max(degs)
    if top != 5:
        raise LabelingError("max-degree", f"maximum degree is {top}, expected 5")
    v = degs.index(top)
    far = g.non_neighbors(v)
    hole = next(iter_holes(g, 5, within=far), None)
    if hole is None:
        raise LabelingError("hole-in-non-neighbourhood", f"no 5-hole among non-neighbours of {v}")

    w: list[int | None] = [None] * 5
    for x in iter_bits(g.adj[v]):
        att = classify_hole_attachment(g, hole, x)
        if att.kind != TWO_APART:
            raise LabelingError("neighbour-attachment",
                                f"neighbour {x} meets the hole at positions {att.positions}")
        if w[att.base] is not None:
            raise LabelingError("distinct-attachments",
                                f"neighbours {w[att.base]} and {x} share attachment {att.base}")
        w[att.base] = x

    y: list[int | None] = [None] * 5
    for x in iter_bits(far & ~G.mask_of(hole)):
        att = classify_hole_attachment(g, hole, x)
        if att.kind != SINGLETON:
            raise LabelingError("second-neighbourhood-attachment",
                                f"vertex {x} meets the hole at positions {att.positions}")
        if y[att.base] is not None:
            raise LabelingError("hole-vertex-private",
                                f"hole vertex {hole[att.base]} has two outside neighbours")
        y[att.base] = x

    if 1 + top + 5 + sum(1 for x in y if x is not None) != g.n:
        raise LabelingError("vertex-partition", "vertices left unlabelled")

    ws = tuple(w)  # all five are present since d(v) = 5 and attachments are distinct
    for i, yi in enumerate(y):
        if yi is None:
            continue
        expect = 1 << ws[(i + 1) % 5] | 1 << ws[(i + 2) % 5]
        if g.adj[yi] & g.adj[v] != expect:
            raise LabelingError("y-neighbourhood",
                                f"y{i}={yi} sees {members(g.adj[yi] & g.adj[v])} in N(v)")
        for step, want in ((1, False), (2, True)):
            for j in (i + step, i - step):
                yj = y[j % 5]
                if yj is not None and g.has_edge(yi, yj) != want:
                    raise LabelingError("y-mutual", f"y{i}={yi} and y{j % 5}={yj}")
    return StructureLabeling(v, ws, tuple(hole), tuple(y))


@lru_cache(maxsize=None)
def clebsch_frame() -> StructureLabeling:
    """The labelling of the canonical Clebsch graph that every g_in_f2 maps through."""
    return extract_labeling(G.clebsch(), check=False)


def labeling_embeddings(g: Graph, lab: StructureLabeling) -> tuple[Embedding, Embedding]:
    """(F1 -> g, g -> F2) induced by a labelling."""
    f1 = [0] * 11
    for j in range(5):
        f1[j] = lab.hole[j]
        f1[5 + j] = lab.w[(j - 1) % 5]
    f1[10] = lab.pivot
    frame = clebsch_frame()
    into = [-1] * g.n
    into[lab.pivot] = frame.pivot
    for i in range(5):
        into[lab.w[i]] = frame.w[i]
        into[lab.hole[i]] = frame.hole[i]
        if lab.y[i] is not None:
            into[lab.y[i]] = frame.y[i]
    return tuple(f1), tuple(into)


# -- classification -----------------------------------------------------------

def classify(g: Graph, check: bool = True) -> Certificate:
    """Cases tried in order: comparable pair, 3-coloring, critical core."""
    if check:
        require_class(g, connected=True)
    pair = find_comparable_pair(g)
    if pair is not None:
        return ComparablePairCase(*pair)
    col = three_color(g)
    if col is not None:
        return ThreeColorableCase(col)
    lab = extract_labeling(g, check=False)
    return CriticalCoreCase(*labeling_embeddings(g, lab))


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    if isinstance(cert, ComparablePairCase):
        u, v = cert.u, cert.v
        return (0 <= u < g.n and 0 <= v < g.n and u != v and not g.has_edge(u, v)
                and not g.adj[u] & ~g.adj[v])
    if isinstance(cert, ThreeColorableCase):
        return cert.coloring.count <= 3 and cert.coloring.is_proper(g)
    if isinstance(cert, CriticalCoreCase):
        return (verify_embedding(g, named("grotzsch"), cert.f1_in_g)
                and verify_embedding(named("clebsch"), g, cert.g_in_f2))
    return False


def certificate_text(cert: Certificate, g: Graph | None = None) -> str:
    if isinstance(cert, ComparablePairCase):
        return f"case-i u={cert.u} v={cert.v}"
    if isinstance(cert, ThreeColorableCase):
        col = cert.coloring
        return f"case-ii k={col.count} colors={list(col.colors)}"
    size = len(cert.g_in_f2)
    return f"case-iii |V|={size} f1={list(cert.f1_in_g)} f2={list(cert.g_in_f2)}"


# -- coloring with at most four colors ----------------------------------------

def color_le4(g: Graph, check: bool = True) -> Coloring:
    """Per component: peel, classify the core, color it, replay the peel."""
    if check:
        require_class(g)
    colors = [0] * g.n
    for comp in G.components(g):
        part = induced(g, comp)
        stack = peel(part)
        cert = classify(stack.core, check=False)
        if isinstance(cert, ThreeColorableCase):
            core_col = cert.coloring
        else:
            core_col = is_k_colorable(stack.core, 4)
            if core_col is None:
                raise LabelingError("four-colorable", "critical core needs a fifth color")
        local = replay(stack, list(core_col.colors), part.n)
        for i, v in enumerate(members(comp)):
            colors[v] = local[i]
    return Coloring.from_colors(colors)
