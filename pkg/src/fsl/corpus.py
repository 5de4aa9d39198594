"""Graph corpora for the verification suites.

Labelled graphs on n vertices are encoded as edge masks in graph6 bit order:
pair (i, j) with i < j is bit j*(j-1)/2 + i, so the first n-1 vertices of an
n-vertex graph occupy the low bits.  Forbidden-subgraph filters are evaluated
for every mask at once with numpy, using heredity: a graph on n vertices is
free of a family iff each of its n vertex-deleted subgraphs is free and it is
not itself a member of the family.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import graph as G
from .graph import Graph, induced, iter_bits
from .patterns import is_free, iter_induced

DEFAULT_MAX_N = 7
HARD_MAX_N = 8
UNIQUE_MAX_N = 7
CHUNK_BITS = 22

SOURCES = ("exhaustive", "clebsch-subsets", "stdin", "named")


class CorpusError(ValueError):
    pass


def exhaustive_cap() -> int:
    raw = os.environ.get("FSL_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    cap = int(raw)
    if not 1 <= cap <= HARD_MAX_N:
        raise CorpusError(f"FSL_MAX_N={cap} outside 1..{HARD_MAX_N}")
    return cap


@dataclass(frozen=True)
class CorpusSpec:
    """What to enumerate.

    ``filters`` name forbidden induced subgraphs (see graph.generate);
    ``unique`` keeps one graph per isomorphism class (the least edge mask for
    the exhaustive source, the least vertex mask under Clebsch automorphisms
    for Clebsch subsets).
    """

    source: str
    filters: tuple[str, ...] = ()
    connected: bool = False
    max_n: int | None = None
    min_n: int = 1
    unique: bool = False
    lines: Iterable[str] | None = field(default=None, compare=False)
    names: tuple[str, ...] = ()


# -- mask encoding ------------------------------------------------------------

def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, rows, check=False)


def mask_from_graph(g: Graph) -> int:
    mask = 0
    bit = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            if row >> i & 1:
                mask |= 1 << bit
            bit += 1
    return mask


def _edge_bits(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def _delete_maps(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each v: (source bit in n-vertex mask, target bit in (n-1)-vertex mask)."""
    maps = []
    for v in range(n):
        pairs = []
        for j in range(1, n):
            for i in range(j):
                if v in (i, j):
                    continue
                pairs.append((pair_index(i, j), pair_index(i - (i > v), j - (j > v))))
        maps.append(tuple(pairs))
    return tuple(maps)


def _labelled_copies(pattern: Graph) -> np.ndarray:
    n = pattern.n
    edges = pattern.edges()
    out = set()
    for perm in permutations(range(n)):
        m = 0
        for u, v in edges:
            m |= 1 << pair_index(perm[u], perm[v])
        out.add(m)
    return np.fromiter(sorted(out), dtype=np.uint32)


def _connected(masks: np.ndarray, n: int) -> np.ndarray:
    if n <= 1:
        return np.ones(len(masks), dtype=bool)
    one = np.uint32(1)
    rows = []
    for v in range(n):
        row = np.zeros(len(masks), dtype=np.uint32)
        for u in range(n):
            if u != v:
                row |= ((masks >> np.uint32(pair_index(u, v))) & one) << np.uint32(u)
        rows.append(row)
    reach = np.ones(len(masks), dtype=np.uint32)
    for _ in range(n - 1):
        nxt = reach.copy()
        for v in range(n):
            nxt |= np.where((reach >> np.uint32(v)) & one, rows[v], np.uint32(0))
        reach = nxt
    return reach == np.uint32((1 << n) - 1)


def _free_chunk(masks: np.ndarray, n: int, below: np.ndarray | None,
                copies: Sequence[np.ndarray]) -> np.ndarray:
    ok = np.ones(len(masks), dtype=bool)
    if below is not None:
        one = np.uint32(1)
        for pairs in _delete_maps(n):
            sub = np.zeros(len(masks), dtype=np.uint32)
            for src, dst in pairs:
                sub |= ((masks >> np.uint32(src)) & one) << np.uint32(dst)
            ok &= below[sub]
    for c in copies:
        ok &= ~np.isin(masks, c)
    return ok


def _level_chunks(n: int) -> Iterator[np.ndarray]:
    total = 1 << _edge_bits(n)
    step = 1 << CHUNK_BITS
    for lo in range(0, total, step):
        yield np.arange(lo, min(total, lo + step), dtype=np.uint32)


def exhaustive_masks(max_n: int, filters: Sequence[str] = (), connected: bool = False,
                     min_n: int = 1) -> Iterator[tuple[int, np.ndarray]]:
    """(n, ascending array of passing edge masks) for n = min_n..max_n."""
    if max_n > HARD_MAX_N:
        raise CorpusError(f"exhaustive enumeration is capped at n={HARD_MAX_N}")
    patterns = [G.generate(f) for f in filters]
    below = None
    for n in range(0, max_n + 1):
        copies = [_labelled_copies(p) for p in patterns if p.n == n]
        keep_table = n < max_n
        table = np.zeros(1 << _edge_bits(n), dtype=bool) if keep_table else None
        passing = []
        for chunk in _level_chunks(n):
            free = _free_chunk(chunk, n, below, copies) if n > 0 else np.ones(1, dtype=bool)
            if table is not None:
                table[chunk[0]:chunk[-1] + 1] = free
            if n >= min_n:
                sel = free & _connected(chunk, n) if connected else free
                passing.append(chunk[sel])
        if n >= min_n:
            yield n, np.concatenate(passing) if passing else np.zeros(0, dtype=np.uint32)
        below = table


@lru_cache(maxsize=None)
def _orbit_tables(n: int) -> list[np.ndarray]:
    """Per 7-bit chunk of an edge mask: image of each chunk value under every permutation."""
    e = _edge_bits(n)
    perms = list(permutations(range(n)))
    dst = np.zeros((len(perms), e), dtype=np.uint32)
    for p, perm in enumerate(perms):
        for j in range(1, n):
            for i in range(j):
                dst[p, pair_index(i, j)] = pair_index(perm[i], perm[j])
    tables = []
    for c in range(0, e, 7):
        width = min(7, e - c)
        vals = np.arange(1 << width, dtype=np.uint32)
        bits = (vals[:, None] >> np.arange(width, dtype=np.uint32)) & np.uint32(1)
        shifted = bits[None, :, :] << dst[:, None, c:c + width]
        tables.append(np.bitwise_or.reduce(shifted, axis=2))
    return tables


def orbit_representatives(n: int, masks: np.ndarray) -> Iterator[int]:
    """Least mask of each isomorphism class present in ``masks`` (which must be closed under relabelling)."""
    if n > UNIQUE_MAX_N:
        raise CorpusError(f"isomorphism reduction is capped at n={UNIQUE_MAX_N}")
    if n <= 1:
        yield from (int(m) for m in masks[:1])
        return
    tables = _orbit_tables(n)
    seen = np.zeros(1 << _edge_bits(n), dtype=bool)
    for m in masks.tolist():
        if seen[m]:
            continue
        yield m
        img = tables[0][:, m & 127]
        for c in range(1, len(tables)):
            img = img | tables[c][:, (m >> (7 * c)) & 127]
        seen[img] = True


def exhaustive_graphs(max_n: int, filters: Sequence[str] = (), connected: bool = False,
                      unique: bool = False, min_n: int = 1) -> Iterator[Graph]:
    for n, masks in exhaustive_masks(max_n, filters, connected, min_n):
        source = orbit_representatives(n, masks) if unique else masks.tolist()
        for m in source:
            yield graph_from_mask(n, m)


# -- Clebsch subsets ----------------------------------------------------------

@lru_cache(maxsize=None)
def clebsch_automorphisms() -> tuple[tuple[int, ...], ...]:
    f2 = G.clebsch()
    return tuple(iter_induced(f2, f2))


@lru_cache(maxsize=None)
def clebsch_orbit_representatives() -> frozenset[int]:
    """Vertex masks that are least in their orbit under the automorphism group."""
    vals = np.arange(256, dtype=np.uint32)
    masks = np.arange(1 << 16, dtype=np.uint32)
    lo, hi = masks & np.uint32(255), masks >> np.uint32(8)
    best = masks.copy()
    for perm in clebsch_automorphisms():
        low = np.zeros(256, dtype=np.uint32)
        high = np.zeros(256, dtype=np.uint32)
        for b in range(8):
            bit = (vals >> np.uint32(b)) & np.uint32(1)
            low |= bit << np.uint32(perm[b])
            high |= bit << np.uint32(perm[8 + b])
        np.minimum(best, low[lo] | high[hi], out=best)
    return frozenset(np.flatnonzero(best == masks).tolist())


def clebsch_subsets(filters: Sequence[str] = (), connected: bool = False, unique: bool = False,
                    min_n: int = 1, max_n: int = 16) -> Iterator[tuple[int, Graph]]:
    """(vertex mask, induced subgraph) over all subsets of the Clebsch graph."""
    f2 = G.clebsch()
    patterns = [G.generate(f) for f in filters]
    # freeness is hereditary: if F2 passes, every induced subgraph does
    per_subset = not is_free(f2, patterns)
    reps = clebsch_orbit_representatives() if unique else None
    for s in range(1, 1 << 16):
        if not min_n <= s.bit_count() <= max_n:
            continue
        if reps is not None and s not in reps:
            continue
        if connected and G.component_of(f2, (s & -s).bit_length() - 1, s) != s:
            continue
        g = induced(f2, s)
        if per_subset and not is_free(g, patterns):
            continue
        yield s, g


# -- text streams -------------------------------------------------------------

def graph6_stream(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """(line number, graph) for each non-blank line; raises with the line number on bad input."""
    for no, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            yield no, G.parse_graph6(text)
        except G.Graph6Error as exc:
            raise CorpusError(f"line {no}: {exc}") from exc


def enumerate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.source == "exhaustive":
        cap = exhaustive_cap()
        max_n = cap if spec.max_n is None else spec.max_n
        if max_n > cap:
            raise CorpusError(f"exhaustive enumeration refuses n={max_n} (cap {cap})")
        yield from exhaustive_graphs(max_n, spec.filters, spec.connected, spec.unique, spec.min_n)
        return
    if spec.source == "clebsch-subsets":
        hi = 16 if spec.max_n is None else spec.max_n
        for _, g in clebsch_subsets(spec.filters, spec.connected, spec.unique, spec.min_n, hi):
            yield g
        return
    if spec.source == "stdin":
        graphs = (g for _, g in graph6_stream(spec.lines or ()))
    elif spec.source == "named":
        graphs = (G.generate(name) for name in spec.names)
    else:
        raise CorpusError(f"unknown corpus source {spec.source!r}")
    patterns = [G.generate(f) for f in spec.filters]
    hi = G.MAX_VERTICES if spec.max_n is None else spec.max_n
    for g in graphs:
        if not spec.min_n <= g.n <= hi:
            continue
        if spec.connected and not G.is_connected(g):
            continue
        if patterns and not is_free(g, patterns):
            continue
        yield g


def one_vertex_extensions(graphs: Iterable[Graph], filters: Sequence[str] = (),
                          connected: bool = False) -> Iterator[Graph]:
    """Every graph obtained by adding one vertex to some input graph, without repeats.

    For a hereditary class, feeding in all class members on n vertices yields
    every class member on n + 1 vertices (up to isomorphism).  Only copies of
    a forbidden pattern through the new vertex need checking.
    """
    patterns = [G.generate(f) for f in filters]
    seen: set[Graph] = set()
    for g in graphs:
        n = g.n
        for nb in range(1 << n):
            h = Graph(n + 1, [row | (nb >> v & 1) << n for v, row in enumerate(g.adj)] + [nb],
                      check=False)
            if h in seen or (connected and not G.is_connected(h)):
                continue
            if any(n in emb for p in patterns for emb in iter_induced(h, p)):
                continue
            seen.add(h)
            yield h
