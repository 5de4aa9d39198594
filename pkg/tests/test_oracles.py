from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import graphs
from fsl import graph as G
from fsl.graph import Graph, induced
from fsl.oracles import (
    Coloring,
    DivisibilityGuardError,
    admits_division,
    chromatic_number,
    clique_number,
    exact_coloring,
    is_k_colorable,
    is_k_vertex_critical,
    is_perfect,
    is_perfect_definitional,
    is_perfectly_divisible_bruteforce,
    max_clique,
    subset_tables,
)


def brute_omega(g: Graph) -> int:
    best = 0
    for k in range(g.n + 1):
        for vs in combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in combinations(vs, 2)):
                best = k
    return best


def brute_chi(g: Graph) -> int:
    for k in range(g.n + 1):
        for cols in product(range(k), repeat=g.n):
            if all(cols[u] != cols[v] for u, v in g.edges()):
                return k
    return g.n


# -- cliques and colorings ----------------------------------------------------

@given(graphs(max_n=9))
def test_clique_number_matches_brute_force(g):
    s = max_clique(g)
    assert s.bit_count() == brute_omega(g)
    assert all(g.adj[v] & s == s & ~(1 << v) for v in G.iter_bits(s))


@settings(max_examples=60)
@given(graphs(max_n=6))
def test_chromatic_number_matches_brute_force(g):
    assert chromatic_number(g) == brute_chi(g)


@given(graphs(max_n=9))
def test_exact_coloring_is_proper(g):
    col = exact_coloring(g)
    assert col.is_proper(g)
    assert is_k_colorable(g, col.count - 1) is None or col.count == 0


def test_named_chromatic_numbers():
    assert chromatic_number(G.petersen()) == 3
    assert chromatic_number(G.grotzsch()) == 4
    assert chromatic_number(G.clebsch()) == 4
    assert chromatic_number(G.cycle(7)) == 3
    assert chromatic_number(G.complete(6)) == 6
    assert clique_number(G.grotzsch()) == 2
    assert clique_number(G.clebsch()) == 2


def test_criticality():
    assert is_k_vertex_critical(G.grotzsch(), 4)
    assert is_k_vertex_critical(G.cycle(5), 3)
    assert not is_k_vertex_critical(G.cycle(6), 2)
    assert is_k_vertex_critical(G.complete(2), 2)
    assert not is_k_vertex_critical(G.clebsch(), 4)
    assert not is_k_vertex_critical(G.petersen(), 3)


def test_coloring_normalisation():
    col = Coloring.from_colors([5, 2, 5, 9])
    assert col == Coloring((1, 0, 1, 2), 3)
    assert not Coloring((0, 0), 1).is_proper(G.complete(2))
    assert not Coloring((0, 2), 3).is_proper(G.complete(2))   # color 1 unused
    assert Coloring((0, 1), 2).is_proper(G.complete(2))


# -- perfection ---------------------------------------------------------------

def test_perfect_examples():
    assert is_perfect(G.cycle(6))
    assert not is_perfect(G.cycle(5))
    assert not is_perfect(G.complement(G.cycle(7)))
    assert is_perfect(G.complete_multipartite([2, 3, 1]))
    assert not is_perfect(G.petersen())


@settings(max_examples=50)
@given(graphs(max_n=7))
def test_spgt_agrees_with_definition(g):
    assert is_perfect(g) == is_perfect_definitional(g)


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_subset_tables(g):
    omega, perfect = subset_tables(g)
    for s in range(1 << g.n):
        h = induced(g, s)
        assert omega[s] == clique_number(h)
        assert perfect[s] == is_perfect(h)


# -- divisibility -------------------------------------------------------------

def test_grotzsch_not_divisible():
    f1 = G.grotzsch()
    rep = is_perfectly_divisible_bruteforce(f1)
    assert not rep.divisible
    assert rep.witness_failure == f1.full
    assert not admits_division(f1)


def test_small_graphs_divisible():
    for g in (G.cycle(5), G.cycle(7), G.petersen(), G.complement(G.cycle(7))):
        assert is_perfectly_divisible_bruteforce(g).divisible


def test_bruteforce_guard():
    with pytest.raises(DivisibilityGuardError):
        is_perfectly_divisible_bruteforce(G.empty(13))
    assert is_perfectly_divisible_bruteforce(G.empty(13), limit=13).divisible


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_perfect_graphs_are_divisible(g):
    if is_perfect(g):
        assert is_perfectly_divisible_bruteforce(g).divisible
