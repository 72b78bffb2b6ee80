"""Brute-force ground truth and seeded random instances.

Everything here is meant to be obviously correct rather than fast.  Size caps
raise :class:`SizeCapError`; nothing is truncated silently.

Random streams come from :class:`random.Random` (Mersenne Twister) seeded with
the integer seed, so a seed reproduces the same graphs within this package.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .biclique import Biclique, eb_hypergraph
from .blg import FDecomposition, iter_f_decompositions
from .graph import Graph, SizeCapError, bits, complete_bipartite_mask, induced, maximal_cliques
from .hypergraph import CliqueWitness, Hypergraph, SubfamilyWitness, Verdict, two_section

BICLIQUE_CAP = 14
HELLY_CAP = 15
CONFORMAL_CAP = 20
HEREDITARY_CAP = 10


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs, in lexicographic order, is an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    pairs = tuple((u, v) for u, v in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, pairs)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (2^(n(n-1)/2) of them)."""
    slots = list(combinations(range(n), 2))
    for code in range(1 << len(slots)):
        yield Graph(n, tuple(slots[i] for i in bits(code)))


def brute_bicliques(G: Graph) -> list[Biclique]:
    """Filter all vertex subsets for complete bipartite ones, keep the inclusion-maximal ones."""
    if G.n > BICLIQUE_CAP:
        raise SizeCapError(f"brute_bicliques is capped at {BICLIQUE_CAP} vertices (got {G.n})")
    good = {}
    for s in range(1, 1 << G.n):
        sides = complete_bipartite_mask(G.masks, s)
        if sides is not None:
            good[s] = sides
    out = []
    for s, (a, b) in good.items():
        # a complete bipartite superset would contain a complete bipartite one-vertex extension
        if not any(s | 1 << w in good for w in range(G.n) if not s >> w & 1):
            out.append(Biclique(tuple(bits(s)), tuple(bits(a)), tuple(bits(b))))
    out.sort()
    return out


def brute_helly(H: Hypergraph, cap: int = HELLY_CAP) -> Verdict:
    """Try every subfamily of size >= 2, smallest first.

    The first pairwise-intersecting subfamily with empty intersection is
    minimal by construction and becomes the witness.
    """
    masks = H.masks()
    if len(masks) > cap:
        raise SizeCapError(f"brute_helly is capped at {cap} hyperedges (got {len(masks)})")
    k = len(masks)
    meets = [[bool(masks[i] & masks[j]) for j in range(k)] for i in range(k)]
    subfamilies = (c for size in range(2, k + 1) for c in combinations(range(k), size))
    for combo in subfamilies:
        if not all(meets[i][j] for i, j in combinations(combo, 2)):
            continue
        common = masks[combo[0]]
        for i in combo[1:]:
            common &= masks[i]
        if not common:
            return Verdict(False, SubfamilyWitness(combo))
    return Verdict(True)


def brute_conformal(H: Hypergraph) -> Verdict:
    if H.universe > CONFORMAL_CAP:
        raise SizeCapError(f"brute_conformal is capped at a universe of {CONFORMAL_CAP} (got {H.universe})")
    sets = [set(h) for h in H.hyperedges]
    used = set().union(*sets)
    for clique in maximal_cliques(two_section(H)):
        if not used & set(clique):
            continue
        if not any(set(clique) <= s for s in sets):
            return Verdict(False, CliqueWitness(clique))
    return Verdict(True)


def pairwise_helly(H: Hypergraph) -> bool:
    """Helly test by growing pairwise-intersecting families; exact, any family size.

    Used where subfamily enumeration would blow past its cap.  A branch stops
    once every family reachable from it is forced to share an element.
    """
    masks = H.masks()
    k = len(masks)
    if k == 0:
        return True
    full = (1 << H.universe) - 1

    def grow(common: int, cands: list[int]) -> bool:
        if not common:
            return False
        shared = common
        for j in cands:
            shared &= masks[j]
        if shared:
            return True
        for pos, j in enumerate(cands):
            rest = [t for t in cands[pos + 1:] if masks[t] & masks[j]]
            if not grow(common & masks[j], rest):
                return False
        return True

    return grow(full, list(range(k)))


def exhaustive_helly(H: Hypergraph) -> bool:
    """``brute_helly`` within its cap, ``pairwise_helly`` beyond it."""
    return brute_helly(H).answer if len(H) <= HELLY_CAP else pairwise_helly(H)


def brute_hereditary_helly(G: Graph) -> Verdict:
    """EB of every induced subgraph on at least two vertices must be Helly.

    The witness is the first failing vertex subset (by size, then
    lexicographically), as a sorted tuple.
    """
    if G.n > HEREDITARY_CAP:
        raise SizeCapError(f"brute_hereditary_helly is capped at {HEREDITARY_CAP} vertices (got {G.n})")
    for size in range(2, G.n + 1):
        for S in combinations(range(G.n), size):
            sub, _ = induced(G, S)
            hyper = eb_hypergraph(sub).hypergraph
            if not exhaustive_helly(hyper):
                return Verdict(False, S)
    return Verdict(True)


def search_f_decomposition(H: Graph) -> FDecomposition | None:
    """First ``F`` (smallest, then lexicographic) with a triangle-free root, or None."""
    return next(iter_f_decompositions(H), None)


__all__ = [
    "all_labeled_graphs",
    "brute_bicliques",
    "brute_conformal",
    "brute_helly",
    "brute_hereditary_helly",
    "exhaustive_helly",
    "make_rng",
    "pairwise_helly",
    "random_graph",
    "search_f_decomposition",
]
