from itertools import permutations

import pytest

from fsl import graph as G
from fsl.corpus import (
    CorpusError,
    CorpusSpec,
    clebsch_automorphisms,
    clebsch_orbit_representatives,
    clebsch_subsets,
    enumerate_corpus,
    exhaustive_cap,
    exhaustive_graphs,
    exhaustive_masks,
    graph6_stream,
    graph_from_mask,
    mask_from_graph,
    one_vertex_extensions,
    pair_index,
)
from fsl.oracles import chromatic_number
from fsl.patterns import find_induced, is_free


def canonical(g: G.Graph) -> str:
    return min(G.to_graph6(G.relabel(g, p)) for p in permutations(range(g.n)))


def test_mask_encoding_follows_graph6_order():
    assert pair_index(0, 1) == 0 and pair_index(1, 2) == 2 and pair_index(0, 3) == 3
    c5 = G.cycle(5)
    assert graph_from_mask(5, mask_from_graph(c5)) == c5


def test_labelled_counts():
    counts = {n: len(m) for n, m in exhaustive_masks(6)}
    assert counts == {n: 2 ** (n * (n - 1) // 2) for n in range(1, 7)}


def test_connected_labelled_counts():
    counts = {n: len(m) for n, m in exhaustive_masks(6, connected=True)}
    assert counts == {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def test_isomorphism_class_counts():
    counts = [0] * 8
    for g in exhaustive_graphs(7, unique=True):
        counts[g.n] += 1
    assert counts[1:] == [1, 2, 4, 11, 34, 156, 1044]
    conn = [0] * 8
    for g in exhaustive_graphs(7, connected=True, unique=True):
        conn[g.n] += 1
    assert conn[1:] == [1, 1, 2, 6, 21, 112, 853]


def test_filters_match_direct_check():
    pats = [G.complete(3), G.bull()]
    direct = [g for n in range(1, 6) for g in (graph_from_mask(n, m) for m in range(1 << n * (n - 1) // 2))
              if is_free(g, pats)]
    assert list(exhaustive_graphs(5, ("c3", "bull"))) == direct


def test_triangle_free_connected_four_vertices():
    got = {canonical(g) for g in exhaustive_graphs(4, ("c3",), connected=True, min_n=4)}
    want = {canonical(G.path(4)), canonical(G.cycle(4)),
            canonical(G.build(4, [(0, 1), (0, 2), (0, 3)]))}
    assert got == want
    assert all(not G.has_triangle(g) and G.is_connected(g)
               for g in exhaustive_graphs(4, ("c3",), connected=True))


def test_unique_representatives_are_distinct_classes():
    reps = list(exhaustive_graphs(5, ("p2p4", "bull"), unique=True, min_n=5))
    forms = {canonical(g) for g in reps}
    assert len(forms) == len(reps)
    labelled = {canonical(g) for g in exhaustive_graphs(5, ("p2p4", "bull"), min_n=5)}
    assert forms == labelled


# -- Clebsch subsets ----------------------------------------------------------

def test_clebsch_symmetry():
    assert len(clebsch_automorphisms()) == 1920
    assert len(clebsch_orbit_representatives()) == 151


def test_clebsch_full_subset():
    got = list(clebsch_subsets(min_n=16))
    assert len(got) == 1 and got[0][1] == G.clebsch()
    assert sum(1 for _ in clebsch_subsets()) == (1 << 16) - 1


def test_clebsch_subsets_with_f1_are_four_chromatic():
    f1 = G.grotzsch()
    seen = 0
    for _, g in clebsch_subsets(min_n=11):
        if find_induced(g, f1) is not None:
            seen += 1
            assert chromatic_number(g) == 4
    assert seen > 0


def test_clebsch_filters_apply_per_subset():
    # F2 contains Petersen as each vertex's non-neighbourhood, so this filter is not skipped
    f2 = G.clebsch()
    kept = {s for s, _ in clebsch_subsets(("petersen",), min_n=10, max_n=10)}
    dropped = {s for s, _ in clebsch_subsets(min_n=10, max_n=10)} - kept
    assert dropped == {f2.non_neighbors(v) for v in range(16)}


# -- streams and caps ---------------------------------------------------------

def test_graph6_stream_line_numbers():
    lines = ["Dhc\n", "\n", "# note\n", "@\n"]
    assert [no for no, _ in graph6_stream(lines)] == [1, 4]
    with pytest.raises(CorpusError, match="line 2"):
        list(graph6_stream(["Dhc", "Dh!"]))


def test_cap_from_environment(monkeypatch):
    monkeypatch.delenv("FSL_MAX_N", raising=False)
    assert exhaustive_cap() == 7
    monkeypatch.setenv("FSL_MAX_N", "5")
    assert exhaustive_cap() == 5
    with pytest.raises(CorpusError):
        list(enumerate_corpus(CorpusSpec("exhaustive", max_n=6)))
    monkeypatch.setenv("FSL_MAX_N", "9")
    with pytest.raises(CorpusError):
        exhaustive_cap()
    with pytest.raises(CorpusError):
        next(exhaustive_masks(9))


def test_enumerate_corpus_sources():
    spec = CorpusSpec("exhaustive", ("c3",), connected=True, max_n=4, min_n=4)
    want = [g for g in exhaustive_graphs(4, connected=True, min_n=4) if not G.has_triangle(g)]
    assert list(enumerate_corpus(spec)) == want
    named = CorpusSpec("named", ("c3",), names=("petersen", "bull", "grotzsch"))
    assert [g.n for g in enumerate_corpus(named)] == [10, 11]
    stdin = CorpusSpec("stdin", max_n=5, lines=["Dhc", "@", "I????????"])
    assert [g.n for g in enumerate_corpus(stdin)] == [5, 1]
    with pytest.raises(CorpusError):
        list(enumerate_corpus(CorpusSpec("nowhere")))


def test_enumeration_is_deterministic():
    a = [G.to_graph6(g) for g in exhaustive_graphs(6, ("p2p4", "bull"), unique=True)]
    b = [G.to_graph6(g) for g in exhaustive_graphs(6, ("p2p4", "bull"), unique=True)]
    assert a == b


def test_one_vertex_extensions_reach_every_class():
    base = list(exhaustive_graphs(5, ("p2p4", "bull"), unique=True, min_n=5))
    grown = {canonical(h) for h in one_vertex_extensions(base, ("p2p4", "bull"), connected=True)}
    want = {canonical(g) for g in exhaustive_graphs(6, ("p2p4", "bull"), connected=True, unique=True, min_n=6)}
    assert grown == want
