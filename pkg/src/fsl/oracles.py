"""Exact ground-truth computations: cliques, colorings, perfection, divisibility.

Every other module is tested against these, so they favour plain exhaustive
search over cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, complement, induced, iter_bits
from .patterns import find_odd_hole


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    count: int

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "Coloring":
        """Renumber the used colors to 0..count-1 keeping their relative order."""
        palette = {c: i for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(palette[c] for c in colors), len(palette))

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if set(self.colors) != set(range(self.count)):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


class DivisibilityGuardError(ValueError):
    """The brute-force divisibility check refuses graphs above its size guard."""


@dataclass(frozen=True)
class DivisibilityReport:
    divisible: bool
    witness_failure: int | None = None   # vertex mask of an induced subgraph with no division


# -- clique number ------------------------------------------------------------

def max_clique(g: Graph, within: int | None = None) -> int:
    """A maximum clique as a vertex mask (lowest-index branches first)."""
    adj = g.adj
    best = [0, 0]   # size, mask

    def grow(cand: int, size: int, mask: int):
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, mask
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            grow(cand & adj[v], size + 1, mask | low)
            cand ^= low

    grow(g.full if within is None else within, 0, 0)
    return best[1]


def clique_number(g: Graph, within: int | None = None) -> int:
    return max_clique(g, within).bit_count()


# -- coloring -----------------------------------------------------------------

def _k_coloring(g: Graph, k: int) -> list[int] | None:
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = g.adj
    seed = max_clique(g)
    if seed.bit_count() > k:
        return None
    colors = [-1] * n
    classes = [0] * k
    for c, v in enumerate(iter_bits(seed)):
        colors[v] = c
        classes[c] |= 1 << v

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        pick, best = -1, None
        for v in iter_bits(uncolored):
            row = adj[v]
            sat = sum(1 for c in range(used) if classes[c] & row)
            free = min(k, used + 1) - sat
            if free <= 0 and used >= k:
                return False
            key = (sat, (row & uncolored).bit_count())
            if best is None or key > best:
                pick, best = v, key
        row = adj[pick]
        bit = 1 << pick
        for c in range(min(used + 1, k)):
            if classes[c] & row:
                continue
            classes[c] |= bit
            colors[pick] = c
            if rec(uncolored & ~bit, max(used, c + 1)):
                return True
            classes[c] &= ~bit
        colors[pick] = -1
        return False

    if rec(g.full & ~seed, seed.bit_count()):
        return colors
    return None


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper coloring with at most k colors, or None."""
    colors = _k_coloring(g, k)
    return None if colors is None else Coloring.from_colors(colors)


def exact_coloring(g: Graph) -> Coloring:
    """An optimal coloring; its ``count`` is the chromatic number."""
    k = clique_number(g)
    while True:
        found = is_k_colorable(g, k)
        if found is not None:
            return found
        k += 1


def chromatic_number(g: Graph) -> int:
    return exact_coloring(g).count


def is_k_vertex_critical(g: Graph, k: int) -> bool:
    if g.n == 0 or chromatic_number(g) != k:
        return False
    return all(is_k_colorable(induced(g, g.full & ~(1 << v)), k - 1) is not None
               for v in range(g.n))


# -- perfection ---------------------------------------------------------------

def is_perfect(g: Graph) -> bool:
    """No odd hole in the graph or its complement."""
    return find_odd_hole(g) is None and find_odd_hole(complement(g)) is None


def is_perfect_definitional(g: Graph) -> bool:
    """chi(H) == omega(H) for every induced subgraph H (exponential; small graphs only)."""
    for size in range(2, g.n + 1):
        for verts in combinations(range(g.n), size):
            mask = 0
            for v in verts:
                mask |= 1 << v
            h = induced(g, mask)
            if is_k_colorable(h, clique_number(h)) is None:
                return False
    return True


def subset_tables(g: Graph) -> tuple[list[int], list[bool]]:
    """Clique number and perfection of ``g[S]`` for every vertex mask S.

    Perfection is built bottom-up: S is perfect iff every S - v is perfect and
    S itself is not an odd hole or odd antihole.
    """
    n = g.n
    adj = g.adj
    size = 1 << n
    omega = [0] * size
    perfect = [True] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        a, b = omega[rest], 1 + omega[rest & adj[v]]
        omega[s] = a if a > b else b
        ok = True
        t = s
        while t:
            bit = t & -t
            if not perfect[s ^ bit]:
                ok = False
                break
            t ^= bit
        if ok:
            k = s.bit_count()
            if k >= 5 and k % 2 == 1 and _is_odd_cycle_or_anticycle(adj, s, k):
                ok = False
        perfect[s] = ok
    return omega, perfect


def _is_odd_cycle_or_anticycle(adj: Sequence[int], s: int, k: int) -> bool:
    degs = [(adj[v] & s).bit_count() for v in iter_bits(s)]
    if all(d == 2 for d in degs):
        rows = {v: adj[v] & s for v in iter_bits(s)}
    elif all(d == k - 3 for d in degs):
        rows = {v: s & ~adj[v] & ~(1 << v) for v in iter_bits(s)}
    else:
        return False
    start = s & -s
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == s


def _has_division(s: int, omega: Sequence[int], perfect: Sequence[bool]) -> bool:
    target = omega[s]
    a = s
    while True:
        if perfect[a] and omega[s ^ a] < target:
            return True
        if a == 0:
            return False
        a = (a - 1) & s


def is_perfectly_divisible_bruteforce(g: Graph, limit: int = 12) -> DivisibilityReport:
    """Check every induced subgraph for a split into a perfect part and a smaller-clique part.

    Subsets are visited by increasing size, so the reported failure is a
    smallest non-divisible induced subgraph.
    """
    if g.n > limit:
        raise DivisibilityGuardError(
            f"brute-force divisibility refuses {g.n} vertices (guard {limit})")
    omega, perfect = subset_tables(g)
    for s in sorted(range(1, 1 << g.n), key=int.bit_count):
        if not _has_division(s, omega, perfect):
            return DivisibilityReport(False, s)
    return DivisibilityReport(True, None)


def admits_division(g: Graph) -> bool:
    """Whether the whole vertex set (only) splits into perfect + smaller clique number."""
    omega, perfect = subset_tables(g)
    return _has_division(g.full, omega, perfect) if g.n else True
