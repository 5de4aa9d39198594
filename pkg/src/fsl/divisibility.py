"""Perfect divisibility for (P2 u P4, bull)-free graphs and the corollary checkers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import graph as G
from .graph import Graph, induced, iter_bits, members
from .oracles import (
    Coloring,
    chromatic_number,
    clique_number,
    exact_coloring,
    is_perfect,
    subset_tables,
)
from .patterns import find_comparable_pair, find_homogeneous_set, find_induced
from .structure import named, require_class, three_color

EXHAUSTIVE_LIMIT = 20


class NotDivisible(ValueError):
    """Division failed during recursive coloring; ``stuck`` is the vertex mask."""

    def __init__(self, stuck: int):
        super().__init__(f"no perfect division of the induced subgraph on {members(stuck)}")
        self.stuck = stuck


@dataclass(frozen=True)
class Division:
    a: int   # perfect part
    b: int   # part with smaller clique number


@dataclass(frozen=True)
class DivisibleColoring:
    coloring: Coloring
    layer_bound: int


def is_valid_division(g: Graph, d: Division) -> bool:
    if d.a & d.b or d.a | d.b != g.full:
        return False
    if not is_perfect(induced(g, d.a)):
        return False
    return g.n == 0 or clique_number(g, d.b) < clique_number(g)


def perfect_division_step(g: Graph) -> Division | None:
    """One split of V(g) into a perfect part and a part of smaller clique number.

    Tries the whole graph, then a vertex x whose non-neighbourhood is perfect
    (A = M(x) + x, B = N(x)), then exhaustive search.
    """
    if g.n == 0 or is_perfect(g):
        return Division(g.full, 0)
    for x in range(g.n):
        far = g.non_neighbors(x)
        if is_perfect(induced(g, far)):
            return Division(far | 1 << x, g.adj[x])
    if g.n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive division search refuses {g.n} vertices")
    omega, perfect = subset_tables(g)
    target = omega[g.full]
    for a in range(g.full, -1, -1):
        if perfect[a] and omega[g.full ^ a] < target:
            return Division(a, g.full ^ a)
    return None


def is_perfectly_divisible_structural(g: Graph, check: bool = True) -> bool:
    """Divisible iff F1-free, for (P2 u P4, bull)-free graphs."""
    if check:
        require_class(g, ("p2p4", "bull"))
    return find_induced(g, named("grotzsch")) is None


def divisible_coloring(g: Graph) -> DivisibleColoring:
    """Color the perfect part optimally, recurse on the smaller-clique part with fresh colors."""
    colors = [0] * g.n

    def paint(mask: int, offset: int) -> None:
        if not mask:
            return
        h = induced(g, mask)
        div = perfect_division_step(h)
        if div is None:
            raise NotDivisible(mask)
        verts = members(mask)
        part_a = induced(h, div.a)
        col = exact_coloring(part_a)
        for i, v in enumerate(iter_bits(div.a)):
            colors[verts[v]] = offset + col.colors[i]
        paint(G.mask_of(verts[v] for v in iter_bits(div.b)), offset + col.count)

    paint(g.full, 0)
    omega = clique_number(g)
    return DivisibleColoring(Coloring.from_colors(colors), comb(omega + 1, 2))


# -- bull-free dichotomy ------------------------------------------------------

@dataclass(frozen=True)
class DichotomyReport:
    homogeneous_set: int | None
    vertices: tuple[tuple[int, bool, bool], ...] = ()   # (v, N(v) perfect, M(v) perfect)

    @property
    def violations(self) -> list[int]:
        return [v for v, n_ok, m_ok in self.vertices if not (n_ok or m_ok)]


def check_bull_free_dichotomy(g: Graph, check: bool = True) -> DichotomyReport:
    if check:
        require_class(g, ("bull",))
    hom = find_homogeneous_set(g)
    if hom is not None:
        return DichotomyReport(hom)
    rows = tuple((v, is_perfect(induced(g, g.adj[v])), is_perfect(induced(g, g.non_neighbors(v))))
                 for v in range(g.n))
    return DichotomyReport(None, rows)


# -- paw-free and diamond-free corollaries ------------------------------------

def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacency (plus equality) must be an equivalence relation."""
    for v in range(g.n):
        cls = g.full & ~g.adj[v]
        for u in iter_bits(cls):
            if g.full & ~g.adj[u] != cls:
                return False
    return True


def olariu_paw_structure(g: Graph, check: bool = True) -> str:
    if check:
        require_class(g, ("paw",), connected=True)
    if not G.has_triangle(g):
        return "triangle-free"
    if is_complete_multipartite(g):
        return "complete-multipartite"
    return "violation"


@dataclass(frozen=True)
class DiamondReport:
    case: str
    omega: int
    chi: int

    @property
    def chi_bound_holds(self) -> bool:
        return self.chi <= max(4, self.omega)


DIAMOND_CASES = ("comparable-pair", "low-min-degree", "prism", "critical-core",
                 "three-colorable", "corollary-violation")


def _diamond_case(g: Graph, omega: int) -> str:
    if find_comparable_pair(g) is not None:
        return "comparable-pair"
    if G.min_degree(g) <= omega - 1:
        return "low-min-degree"
    prism = G.cartesian_product(G.complete(2), G.complete(omega)) if 2 * omega <= G.MAX_VERTICES else None
    if prism is not None and prism.n == g.n and find_induced(g, prism) is not None:
        return "prism"
    if (g.n <= 16 and find_induced(g, named("grotzsch")) is not None
            and find_induced(named("clebsch"), g) is not None):
        return "critical-core"
    if three_color(g) is not None:
        return "three-colorable"
    return "corollary-violation"


def check_diamond_corollary(g: Graph, check: bool = True) -> DiamondReport:
    """First applicable case of the (P2 u P4, bull, diamond)-free structure, plus chi <= max(4, omega)."""
    if check:
        require_class(g, ("p2p4", "bull", "diamond"), connected=True)
    omega = clique_number(g)
    return DiamondReport(_diamond_case(g, omega), omega, chromatic_number(g))

