import os
import random
from itertools import combinations

import hypothesis
import networkx as nx
import pytest
from hypothesis import strategies as st

from edgebiclique.biclique import enumerate_bicliques
from edgebiclique.catalog import catalog
from edgebiclique.graph import Graph, build_graph, complete_bipartite_mask, to_mask
from edgebiclique.oracle import random_graph

hypothesis.settings.register_profile("default", max_examples=150, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    slots = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return Graph(n, tuple(s for s, keep in zip(slots, chosen) if keep))


@st.composite
def hypergraphs(draw, max_universe=8, max_edges=8):
    from edgebiclique.hypergraph import make_hypergraph

    universe = draw(st.integers(1, max_universe))
    sets = draw(
        st.lists(
            st.sets(st.integers(0, universe - 1), min_size=1),
            max_size=max_edges,
        )
    )
    return make_hypergraph(universe, sets)


def atlas(n):
    """One representative of every isomorphism class on ``n`` vertices (n <= 7)."""
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == n:
            yield build_graph(n, list(g.edges()))


def nx_graph(G):
    h = nx.Graph()
    h.add_nodes_from(range(G.n))
    h.add_edges_from(G.edges)
    return h


@pytest.fixture
def prism():
    return catalog("prism")


# EdgeIds of the prism, named by vertex letters.
PRISM_EDGE = {name: i for i, name in enumerate(["ab", "ac", "ad", "bc", "be", "cf", "de", "df", "ef"])}


def merge_lemma_samples(count, seed):
    """Yield (G, B1, B2, x) meeting the merge-lemma hypotheses, ``count`` of them."""
    rng = random.Random(seed)
    seen = 0
    while seen < count:
        G = random_graph(rng.randint(4, 9), rng.choice([0.3, 0.5, 0.7]), rng)
        if G.n < 3:
            continue
        verts = list(range(G.n))
        # bias toward complete bipartite pieces by sampling inside bicliques most of the time
        pool = verts
        bs = enumerate_bicliques(G)
        if bs and rng.random() < 0.8:
            pool = list(rng.choice(bs).vertices)
        if len(pool) < 2:
            continue
        B1 = set(rng.sample(pool, rng.randint(1, len(pool))))
        B2 = set(rng.sample(pool, rng.randint(1, len(pool))))
        B2.add(rng.choice(sorted(B1)))
        x = rng.choice(verts)
        if x in B1 | B2:
            continue
        cb = lambda S: complete_bipartite_mask(G.masks, to_mask(S)) is not None
        if cb(B1 | B2) and cb(B1 | {x}) and cb(B2 | {x}):
            seen += 1
            yield G, B1, B2, x
