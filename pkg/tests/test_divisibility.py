from math import comb

import pytest
from hypothesis import given, settings

from conftest import graphs
from fsl import graph as G
from fsl.corpus import exhaustive_graphs
from fsl.divisibility import (
    Division,
    NotDivisible,
    check_bull_free_dichotomy,
    check_diamond_corollary,
    divisible_coloring,
    is_complete_multipartite,
    is_perfectly_divisible_structural,
    is_valid_division,
    olariu_paw_structure,
    perfect_division_step,
)
from fsl.graph import induced
from fsl.oracles import chromatic_number, clique_number, is_perfect, is_perfectly_divisible_bruteforce
from fsl.patterns import find_induced, is_homogeneous
from fsl.structure import ClassViolation
from fsl.suites import f1_join


# -- division steps -----------------------------------------------------------

def test_division_of_perfect_graph_is_whole():
    g = G.cycle(6)
    assert perfect_division_step(g) == Division(g.full, 0)


def test_division_of_c5():
    c5 = G.cycle(5)
    d = perfect_division_step(c5)
    assert d == Division(0b01101, 0b10010)   # M(0) + 0 and N(0)
    assert is_valid_division(c5, d)


def test_invalid_divisions():
    c5 = G.cycle(5)
    assert not is_valid_division(c5, Division(c5.full, 0))
    assert not is_valid_division(c5, Division(0b00011, 0b11100))
    assert not is_valid_division(c5, Division(0b00111, 0b11100))


def test_grotzsch_has_no_division():
    assert perfect_division_step(G.grotzsch()) is None
    with pytest.raises(NotDivisible) as exc:
        divisible_coloring(G.grotzsch())
    assert exc.value.stuck == G.grotzsch().full


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_division_step_agrees_with_existence(g):
    d = perfect_division_step(g)
    omega_all = clique_number(g)
    exists = any(is_perfect(induced(g, a)) and clique_number(g, g.full ^ a) < omega_all
                 for a in range(1 << g.n)) or g.n == 0
    assert (d is not None) == exists
    if d is not None:
        assert is_valid_division(g, d)


# -- structural prediction ----------------------------------------------------

def test_structural_prediction():
    assert is_perfectly_divisible_structural(G.cycle(5))
    assert not is_perfectly_divisible_structural(G.grotzsch())
    with pytest.raises(ClassViolation):
        is_perfectly_divisible_structural(G.bull())


@pytest.mark.parametrize("k", [1, 2])
def test_grotzsch_joins(k):
    g = f1_join(k)
    assert g.n == 11 + k
    assert clique_number(g) == k + 2
    assert not is_perfectly_divisible_structural(g)
    rep = is_perfectly_divisible_bruteforce(g, limit=14)
    assert not rep.divisible


def test_divisible_coloring_k4():
    dc = divisible_coloring(G.complete(4))
    assert dc.coloring.count == 4 and dc.layer_bound == comb(5, 2) == 10


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_divisible_coloring_bound(g):
    if find_induced(g, G.bull()) is not None or find_induced(g, G.p2p4()) is not None:
        return
    dc = divisible_coloring(g)
    assert dc.coloring.is_proper(g)
    assert chromatic_number(g) <= dc.coloring.count <= dc.layer_bound


# -- bull-free dichotomy ------------------------------------------------------

def test_dichotomy_examples():
    rep = check_bull_free_dichotomy(G.paw())
    assert rep.homogeneous_set == 0b0110
    rep = check_bull_free_dichotomy(G.cycle(5))
    assert rep.homogeneous_set is None
    assert rep.violations == []
    assert all(n_ok for _, n_ok, _ in rep.vertices)


def test_dichotomy_over_bull_free_corpus():
    checked = 0
    for g in exhaustive_graphs(7, ("bull",), unique=True, min_n=3):
        rep = check_bull_free_dichotomy(g, check=False)
        if rep.homogeneous_set is not None:
            assert is_homogeneous(g, rep.homogeneous_set)
        else:
            checked += 1
            assert rep.violations == []
    assert checked > 0


# -- paw-free structure -------------------------------------------------------

def test_multipartite_recognition():
    assert is_complete_multipartite(G.complete_multipartite([2, 2, 3]))
    assert is_complete_multipartite(G.complete(4))
    assert not is_complete_multipartite(G.path(4))


def test_paw_free_structure_over_corpus():
    seen = set()
    for g in exhaustive_graphs(7, ("paw",), connected=True, unique=True):
        kind = olariu_paw_structure(g, check=False)
        assert kind != "violation", G.to_graph6(g)
        seen.add(kind)
    assert seen == {"triangle-free", "complete-multipartite"}


def test_paw_structure_rejects_paw():
    with pytest.raises(ClassViolation):
        olariu_paw_structure(G.paw())


# -- diamond-free corollary ---------------------------------------------------

def test_diamond_cases():
    prism = G.cartesian_product(G.complete(2), G.complete(3))
    rep = check_diamond_corollary(prism)
    assert (rep.case, rep.omega, rep.chi) == ("prism", 3, 3)
    assert check_diamond_corollary(G.cycle(4)).case == "comparable-pair"
    assert check_diamond_corollary(G.path(3)).case == "comparable-pair"
    rep = check_diamond_corollary(G.grotzsch())
    assert (rep.case, rep.chi) == ("critical-core", 4)
    assert rep.chi_bound_holds


def test_diamond_cases_over_corpus():
    for g in exhaustive_graphs(7, ("p2p4", "bull", "diamond"), connected=True, unique=True):
        rep = check_diamond_corollary(g, check=False)
        assert rep.case != "corollary-violation"
        assert rep.chi_bound_holds
