"""Induced-subgraph search and the structural detectors built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, complement, iter_bits, members

# An embedding maps pattern vertex i to host vertex emb[i].
Embedding = tuple[int, ...]


def _search_order(pattern: Graph) -> list[int]:
    """Highest degree first, then greedily the vertex with most placed neighbours."""
    deg = pattern.degrees()
    left = set(range(pattern.n))
    order: list[int] = []
    placed = 0
    while left:
        p = max(left, key=lambda q: ((pattern.adj[q] & placed).bit_count(), deg[q], -q))
        order.append(p)
        placed |= 1 << p
        left.remove(p)
    return order


def iter_induced(host: Graph, pattern: Graph, within: int | None = None) -> Iterator[Embedding]:
    """All induced embeddings of ``pattern`` into ``host``, in search order."""
    k = pattern.n
    allowed = host.full if within is None else within & host.full
    if k == 0:
        yield ()
        return
    if k > allowed.bit_count():
        return
    order = _search_order(pattern)
    pos = {p: d for d, p in enumerate(order)}
    # for each depth: earlier depths adjacent / non-adjacent to this pattern vertex
    linked = [[pos[q] for q in iter_bits(pattern.adj[p]) if pos[q] < d] for d, p in enumerate(order)]
    apart = [[e for e in range(d) if e not in linked[d]] for d in range(k)]
    hdeg = host.degrees()
    fits = []
    for p in order:
        need = pattern.degree(p)
        fits.append(sum(1 << v for v in range(host.n) if hdeg[v] >= need) & allowed)
    hadj = host.adj
    img = [0] * k

    def rec(d: int, used: int):
        cand = fits[d] & ~used
        for e in linked[d]:
            cand &= hadj[img[e]]
        for e in apart[d]:
            cand &= ~hadj[img[e]]
        while cand:
            low = cand & -cand
            cand ^= low
            img[d] = low.bit_length() - 1
            if d + 1 == k:
                yield tuple(img[pos[p]] for p in range(k))
            else:
                yield from rec(d + 1, used | low)

    yield from rec(0, 0)


def find_induced(host: Graph, pattern: Graph, within: int | None = None) -> Embedding | None:
    return next(iter_induced(host, pattern, within), None)


def verify_embedding(host: Graph, pattern: Graph, emb: Sequence[int]) -> bool:
    """Independent check: injective, in range, and both adjacency and non-adjacency kept."""
    if len(emb) != pattern.n or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= x < host.n for x in emb):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(emb[i], emb[j]):
                return False
    return True


def find_violation(g: Graph, patterns: Sequence[Graph]) -> tuple[int, Embedding] | None:
    """First (pattern index, embedding) found, or None if ``g`` is free of all."""
    for idx, h in enumerate(patterns):
        emb = find_induced(g, h)
        if emb is not None:
            return idx, emb
    return None


def is_free(g: Graph, patterns: Sequence[Graph]) -> bool:
    return find_violation(g, patterns) is None


# -- holes --------------------------------------------------------------------

def iter_holes(g: Graph, k: int, within: int | None = None) -> Iterator[Embedding]:
    """Each induced k-cycle once: starts at its least vertex, second vertex < last."""
    if k < 4:
        raise ValueError("holes have length at least 4")
    allowed = g.full if within is None else within & g.full
    adj = g.adj
    for s in iter_bits(allowed):
        higher = allowed & ~((2 << s) - 1)
        closed_s = adj[s] | 1 << s
        path = [s]

        def extend(mid: int, used: int):
            # mid: union of closed neighbourhoods of path[1:-1]
            last = path[-1]
            if len(path) == k - 1:
                cand = adj[last] & adj[s] & higher & ~mid & ~used
                cand &= ~((2 << path[1]) - 1)
                for c in iter_bits(cand):
                    yield tuple(path) + (c,)
                return
            cand = adj[last] & higher & ~mid & ~used
            if len(path) > 1:
                cand &= ~closed_s
            nxt = mid | adj[last] | 1 << last if len(path) > 1 else mid
            for c in iter_bits(cand):
                path.append(c)
                yield from extend(nxt, used | 1 << c)
                path.pop()

        yield from extend(0, 1 << s)


def find_hole(g: Graph, k: int, within: int | None = None) -> Embedding | None:
    return next(iter_holes(g, k, within), None)


def find_odd_hole(g: Graph) -> Embedding | None:
    for k in range(5, g.n + 1, 2):
        hole = find_hole(g, k)
        if hole is not None:
            return hole
    return None


def find_odd_antihole(g: Graph) -> Embedding | None:
    return find_odd_hole(complement(g))


# -- dominating sets and hole attachments -------------------------------------

def is_dominating(g: Graph, s: int) -> bool:
    return g.set_non_neighbors(s) == 0


@dataclass(frozen=True)
class HoleAttachment:
    """How a vertex outside a hole meets it.

    ``positions`` are indices into the hole's cycle order.  ``base`` is the
    index i for the kinds {i, i+2}, {i, i+2, i+4} and {i}; it is None for
    ``full`` and ``lemma-violation``.
    """

    kind: str
    base: int | None
    positions: tuple[int, ...]

    @property
    def legal(self) -> bool:
        return self.kind != "lemma-violation"


TWO_APART = "two-apart"
FULL = "full"
TRIPLE = "three-apart-triple"
SINGLETON = "singleton"
VIOLATION = "lemma-violation"


def classify_hole_attachment(g: Graph, hole: Sequence[int], x: int) -> HoleAttachment:
    k = len(hole)
    if k not in (5, 7):
        raise ValueError("attachments are classified against 5- or 7-holes only")
    if x in hole:
        raise ValueError(f"vertex {x} lies on the hole")
    hit = tuple(i for i, c in enumerate(hole) if g.adj[x] >> c & 1)
    hits = set(hit)
    if len(hit) == k:
        return HoleAttachment(FULL, None, hit)
    if len(hit) == 1:
        return HoleAttachment(SINGLETON, hit[0], hit)
    for i in hit:
        if len(hit) == 2 and hits == {i, (i + 2) % k}:
            return HoleAttachment(TWO_APART, i, hit)
        if k == 7 and len(hit) == 3 and hits == {i, (i + 2) % 7, (i + 4) % 7}:
            return HoleAttachment(TRIPLE, i, hit)
    return HoleAttachment(VIOLATION, None, hit)


# -- comparable pairs and homogeneous sets ------------------------------------

def comparable_pair_within(g: Graph, alive: int) -> tuple[int, int] | None:
    """Least (u, v) in ``g[alive]`` with u, v non-adjacent and N(u) within N(v)."""
    adj = g.adj
    verts = members(alive)
    rows = {v: adj[v] & alive for v in verts}
    for u in verts:
        nu = rows[u]
        for v in verts:
            if v != u and not nu >> v & 1 and not nu & ~rows[v]:
                return u, v
    return None


def find_comparable_pair(g: Graph) -> tuple[int, int] | None:
    return comparable_pair_within(g, g.full)


def module_closure(g: Graph, seed: int) -> int:
    """Smallest set containing ``seed`` that no outside vertex splits."""
    s = seed
    outside = g.full & ~s
    changed = True
    while changed:
        changed = False
        for w in iter_bits(outside):
            seen = g.adj[w] & s
            if seen and seen != s:
                s |= 1 << w
                outside &= ~(1 << w)
                changed = True
    return s


def find_homogeneous_set(g: Graph) -> int | None:
    """A homogeneous set S with 1 < |S| < n grown from the first seed pair that allows one."""
    for a in range(g.n):
        for b in range(a + 1, g.n):
            s = module_closure(g, 1 << a | 1 << b)
            if s != g.full:
                return s
    return None


def is_homogeneous(g: Graph, s: int) -> bool:
    if not 1 < s.bit_count() < g.n:
        return False
    for w in iter_bits(g.full & ~s):
        seen = g.adj[w] & s
        if seen and seen != s:
            return False
    return True
