from itertools import combinations

import pytest
from hypothesis import given

from conftest import hypergraphs
from edgebiclique.biclique import eb_hypergraph
from edgebiclique.blg import biclique_line_graph
from edgebiclique.catalog import catalog, complete, cycle, path
from edgebiclique.graph import Graph, GraphError, maximal_cliques
from edgebiclique.hypergraph import (
    CliqueWitness,
    SubfamilyWitness,
    clique_hypergraph,
    dual,
    hyper_line_graph,
    induced_subhypergraph,
    is_conformal,
    is_helly,
    is_reduced,
    make_hypergraph,
    reduction,
    two_section,
)
from edgebiclique.oracle import brute_conformal, brute_helly

from conftest import PRISM_EDGE as E


def H(universe, *sets):
    return make_hypergraph(universe, sets)


def test_make_hypergraph_canonical():
    h = H(4, [2, 1], [0], [1, 2])
    assert h.hyperedges == ((0,), (1, 2))
    with pytest.raises(GraphError):
        H(3, [])
    with pytest.raises(GraphError):
        H(3, [0, 3])


def test_dual_examples(prism):
    assert dual(eb_hypergraph(prism).hypergraph).hyperedges == ((0,), (0, 1), (0, 2), (1,), (1, 2), (2,))
    assert dual(H(2, [0, 1])).hyperedges == ((0,),)
    assert dual(H(2, [0], [1])).hyperedges == ((0,), (1,))


def test_dual_drops_uncovered_vertices():
    assert dual(H(5, [0, 1], [1, 2])).hyperedges == ((0,), (0, 1), (1,))


def test_two_section_examples(prism):
    eb = eb_hypergraph(prism).hypergraph
    assert two_section(eb) == biclique_line_graph(prism).graph
    assert two_section(H(3, [0, 1, 2])) == complete(3)
    assert two_section(H(3, [0], [1], [2])) == Graph(3, ())


def test_hyper_line_graph_examples(prism):
    assert hyper_line_graph(eb_hypergraph(prism).hypergraph) == complete(3)
    assert hyper_line_graph(H(2, [0], [1])) == Graph(2, ())
    assert hyper_line_graph(H(3, [0, 1], [1, 2], [0, 2])) == complete(3)


def test_reduction_examples():
    assert reduction(H(3, [0, 1], [0, 1, 2])).hyperedges == ((0, 1, 2),)
    assert reduction(H(2, [0], [1], [0, 1])).hyperedges == ((0, 1),)
    red = H(3, [0, 1], [1, 2])
    assert reduction(red) == red


def test_is_helly_examples(prism):
    tri = H(3, [0, 1], [1, 2], [0, 2])
    v = is_helly(tri)
    assert not v and v.witness.indices == (0, 1, 2)
    eb = eb_hypergraph(prism).hypergraph
    v = is_helly(eb)
    assert not v and v.witness.indices == (0, 1, 2)
    assert is_helly(eb_hypergraph(path(4)).hypergraph)


def test_is_conformal_examples(prism):
    v = is_conformal(eb_hypergraph(prism).hypergraph)
    assert not v
    assert v.witness.clique == (E["ad"], E["be"], E["cf"])
    assert is_conformal(H(3, [0, 1, 2]))
    assert is_conformal(eb_hypergraph(cycle(4)).hypergraph)


def test_clique_hypergraph_examples(prism):
    L = biclique_line_graph(prism).graph
    expected = sorted(
        tuple(sorted(E[x] for x in group))
        for group in [("ab", "ad", "be", "de"), ("ac", "ad", "cf", "df"), ("bc", "be", "cf", "ef"), ("ad", "be", "cf")]
    )
    assert list(clique_hypergraph(L).hyperedges) == expected
    assert clique_hypergraph(complete(3)).hyperedges == ((0, 1, 2),)
    assert clique_hypergraph(cycle(4)).hyperedges == ((0, 1), (0, 3), (1, 2), (2, 3))


@given(hypergraphs())
def test_two_section_of_dual_equals_line_graph(h):
    # two hyperedges meet iff some vertex lies in both, iff some dual set holds both indices
    assert two_section(dual(h)) == hyper_line_graph(h)


@given(hypergraphs())
def test_conformal_iff_dual_helly(h):
    assert is_conformal(h).answer == is_helly(dual(h)).answer
    assert brute_conformal(h).answer == is_conformal(h).answer


@given(hypergraphs(max_universe=9, max_edges=12))
def test_berge_matches_brute_force(h):
    fast, slow = is_helly(h), brute_helly(h)
    assert fast.answer == slow.answer
    for v in (fast, slow):
        if not v:
            assert v.witness.verify(h)


def test_berge_matches_brute_force_on_adversarial_families():
    # sunflower-free "triangle" families of growing size: pairwise meet, no common point
    for k in range(3, 7):
        sets = [[i, j] for i, j in combinations(range(k), 2)]
        fam = make_hypergraph(len(sets), [[p for p, pair in enumerate(sets) if v in pair] for v in range(k)])
        assert is_helly(fam).answer == brute_helly(fam).answer
    star = make_hypergraph(6, [[0, i] for i in range(1, 6)])
    assert is_helly(star) and brute_helly(star)
    co = make_hypergraph(5, [[j for j in range(5) if j != i] for i in range(5)])
    assert not is_helly(co) and not brute_helly(co)


@given(hypergraphs())
def test_reduction_idempotent(h):
    r = reduction(h)
    assert is_reduced(r)
    assert reduction(r) == r
    assert set(r.hyperedges) <= set(h.hyperedges)
    for e in h.hyperedges:
        assert any(set(e) <= set(f) for f in r.hyperedges)


@given(hypergraphs())
def test_witnesses_verify(h):
    v = is_helly(h)
    if not v:
        assert isinstance(v.witness, SubfamilyWitness) and v.witness.verify(h)
    c = is_conformal(h)
    if not c:
        assert isinstance(c.witness, CliqueWitness) and c.witness.verify(h)


def test_uncovered_vertices_are_ignored_by_conformality():
    h = H(3, [0, 1])
    assert is_conformal(h) and brute_conformal(h)
    assert is_conformal(H(1))


def test_witness_verify_rejects_bogus():
    h = H(3, [0, 1], [1, 2], [0, 2])
    assert not SubfamilyWitness((0, 1)).verify(h)
    assert not SubfamilyWitness((0,)).verify(h)
    assert not CliqueWitness((0, 1)).verify(H(3, [0, 1, 2]))


def test_clique_hypergraph_is_reduced_and_matches_cliques():
    G = catalog("diamond")
    ch = clique_hypergraph(G)
    assert is_reduced(ch)
    assert list(ch.hyperedges) == maximal_cliques(G)


def test_induced_subhypergraph_traces():
    h = H(4, [0, 1], [2, 3], [1, 2])
    sub = induced_subhypergraph(h, [1, 2])
    assert sub.hyperedges == ((0,), (0, 1), (1,))
