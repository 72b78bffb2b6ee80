import random
from itertools import combinations

import pytest
from hypothesis import given

from conftest import PRISM_EDGE as E
from conftest import graphs
from edgebiclique.biclique import eb_hypergraph
from edgebiclique.blg import biclique_line_graph, root_graph, verify_f_decomposition, has_triangle
from edgebiclique.catalog import catalog, complete, complete_bipartite, cycle, path
from edgebiclique.graph import SizeCapError, build_graph, induced, maximal_cliques
from edgebiclique.hypergraph import clique_hypergraph, is_conformal, is_helly
from edgebiclique.oracle import all_labeled_graphs, brute_hereditary_helly, random_graph
from edgebiclique.recognition import (
    BTemplateWitness,
    Embedding,
    ExtendedTriangleWitness,
    find_b_template,
    find_induced,
    is_clique_helly,
    is_eb_conformal,
    is_eb_helly,
    is_eb_hereditary_helly,
    is_hereditary_blg,
)


def test_find_induced_examples(prism):
    image = find_induced(prism, cycle(4))
    assert image is not None and sorted(image) == [0, 1, 3, 4]
    assert Embedding("C4", image).verify(prism)
    assert find_induced(complete_bipartite(3, 3), complete(3)) is None
    assert find_induced(cycle(5), path(4)) is not None
    with pytest.raises(SizeCapError):
        find_induced(complete(12), complete(11))


@given(graphs(max_n=7), graphs(max_n=4))
def test_find_induced_against_subset_search(host, pattern):
    from edgebiclique.graph import is_isomorphic

    expected = any(
        is_isomorphic(induced(host, S)[0], pattern) is not None for S in combinations(range(host.n), pattern.n)
    )
    image = find_induced(host, pattern)
    assert (image is not None) == expected
    if image is not None:
        for p, q in combinations(range(pattern.n), 2):
            assert pattern.has_edge(p, q) == host.has_edge(image[p], image[q])


def test_is_eb_conformal_examples(prism):
    v = is_eb_conformal(prism)
    assert not v and v.witness == Embedding("prism", (0, 1, 2, 3, 4, 5))
    assert is_eb_conformal(cycle(4))
    pendant = build_graph(7, list(prism.edges) + [(5, 6)])
    v = is_eb_conformal(pendant)
    assert not v and v.witness.verify(pendant)


def test_is_clique_helly_examples(prism):
    L = biclique_line_graph(prism).graph
    v = is_clique_helly(L)
    assert not v
    assert isinstance(v.witness, ExtendedTriangleWitness) and v.witness.verify(L)
    assert set(v.witness.triangle) == {E["ad"], E["be"], E["cf"]}
    assert is_clique_helly(complete(3))
    assert is_clique_helly(cycle(4))


def test_is_eb_helly_examples(prism):
    assert not is_eb_helly(prism)
    assert is_eb_helly(path(4))
    assert is_eb_helly(cycle(6))


def test_find_b_template_examples(prism):
    w = find_b_template(catalog("btemplate-1"))
    assert w is not None and w.case == 1 and w.verify(catalog("btemplate-1"))
    assert find_b_template(prism) is None
    assert find_b_template(complete_bipartite(3, 3)) is None


@pytest.mark.parametrize("i,case", [(1, 1), (2, 1), (3, 1), (4, 1), (5, 2), (6, 2)])
def test_each_btemplate_is_found_and_kills_hereditary_helly(i, case):
    G = catalog(f"btemplate-{i}")
    w = find_b_template(G)
    assert w is not None and w.verify(G)
    v = is_eb_hereditary_helly(G)
    assert not v and v.witness.verify(G)
    if case == 1:
        assert w.case == 1
    assert not brute_hereditary_helly(G)


def test_btemplate_x_edges_are_free():
    # adding edges among the x vertices keeps a template a template
    base = catalog("btemplate-1")
    for extra in ([(4, 5)], [(4, 5), (5, 6)], [(4, 5), (4, 6), (5, 6)]):
        G = build_graph(7, list(base.edges) + extra)
        w = find_b_template(G)
        assert w is not None and w.verify(G)


def test_btemplate_witness_rejects_bogus():
    G = catalog("btemplate-1")
    assert not BTemplateWitness(1, (0, 1, 2, 3), (4, 4, 5)).verify(G)
    assert not BTemplateWitness(1, (1, 0, 2, 3), (4, 5, 6)).verify(G)
    assert not BTemplateWitness(3, (0, 1, 2, 3), (4, 5, 6)).verify(G)


def test_is_eb_hereditary_helly_examples(prism):
    assert not is_eb_hereditary_helly(prism)
    assert not is_eb_hereditary_helly(catalog("btemplate-1"))
    assert is_eb_hereditary_helly(path(4))


def test_is_hereditary_blg_examples():
    v = is_hereditary_blg(catalog("claw"))
    assert not v and v.witness.pattern == "claw"
    assert is_hereditary_blg(cycle(5))
    assert is_hereditary_blg(complete(4))
    v = is_hereditary_blg(catalog("diamond"))
    assert not v and v.witness.pattern == "diamond"


@given(graphs(max_n=8))
def test_conformality_triangle(G):
    eb = eb_hypergraph(G).hypergraph
    fast = is_eb_conformal(G).answer
    same = set(eb.hyperedges) == set(maximal_cliques(biclique_line_graph(G).graph))
    assert fast == is_conformal(eb).answer == same


@given(graphs(max_n=8))
def test_helly_triangle(G):
    eb = eb_hypergraph(G).hypergraph
    L = biclique_line_graph(G).graph
    v = is_eb_helly(G)
    assert v.answer == is_helly(eb).answer == is_clique_helly(L).answer
    assert is_clique_helly(L).answer == is_clique_helly(L, brute=True).answer
    assert is_clique_helly(L).answer == is_helly(clique_hypergraph(L)).answer
    if not v:
        assert v.witness.verify(L)


@given(graphs(max_n=8))
def test_hereditary_helly_implies_helly_and_is_downward_closed(G):
    v = is_eb_hereditary_helly(G)
    if not v:
        assert v.witness.verify(G)
        return
    assert is_eb_helly(G)
    rng = random.Random(G.m)
    for _ in range(5):
        if G.n == 0:
            break
        S = rng.sample(range(G.n), rng.randint(1, G.n))
        assert is_eb_hereditary_helly(induced(G, S)[0])


def test_hereditary_helly_agrees_with_brute_force_small():
    for n in range(6):
        for G in all_labeled_graphs(n):
            assert is_eb_hereditary_helly(G).answer == brute_hereditary_helly(G).answer


@pytest.mark.slow
def test_hereditary_helly_agrees_with_brute_force_random_n8():
    rng = random.Random(8)
    for _ in range(60):
        G = random_graph(8, rng.choice([0.3, 0.5, 0.7]), rng)
        assert is_eb_hereditary_helly(G).answer == brute_hereditary_helly(G).answer


@given(graphs(max_n=8))
def test_hereditary_blg_witness_verifies(G):
    v = is_hereditary_blg(G)
    if not v:
        assert v.witness.verify(G)


def test_hereditary_blg_constructivity_small():
    checked = 0
    for n in range(1, 6):
        for H in all_labeled_graphs(n):
            if not is_hereditary_blg(H):
                continue
            found = root_graph(H)
            assert found is not None
            G, edge_map = found
            assert not has_triangle(G)
            assert verify_f_decomposition(H, [], G, edge_map)
            checked += 1
    assert checked > 100
