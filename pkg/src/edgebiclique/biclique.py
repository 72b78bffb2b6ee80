"""Maximal biclique enumeration and the edge-biclique hypergraph."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, complete_bipartite_mask, to_mask
from .hypergraph import Hypergraph


@dataclass(frozen=True, order=True)
class Biclique:
    """Maximal induced complete bipartite vertex set; ``side_a`` holds the smallest vertex."""

    vertices: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    @classmethod
    def from_masks(cls, a: int, b: int) -> "Biclique":
        if (a & -a) > (b & -b):
            a, b = b, a
        return cls(tuple(bits(a | b)), tuple(bits(a)), tuple(bits(b)))

    def edge_ids(self, G: Graph) -> tuple[int, ...]:
        return tuple(sorted(G.edge_id(u, v) for u in self.side_a for v in self.side_b))


def enumerate_bicliques(G: Graph) -> list[Biclique]:
    """All maximal bicliques of ``G`` with both sides nonempty, sorted by vertex set.

    Each biclique is grown from its smallest edge ``(u, v)``: side A starts at
    ``{u}``, side B at ``{v}``, and the search branches include/exclude on
    vertices that can join a side.  Vertices whose addition would create an
    edge with a smaller id are never included, which makes every biclique
    appear under exactly one seed.  As in Bron-Kerbosch, excluded vertices that
    could still extend the current pair block it from being reported.
    """
    masks = G.masks
    edge_id = G.edge_index
    found: list[Biclique] = []

    for seed, (u, v) in enumerate(G.edges):

        def earliest_new_edge(w: int, opposite: int) -> bool:
            for x in bits(masks[w] & opposite):
                if edge_id[(w, x) if w < x else (x, w)] < seed:
                    return True
            return False

        def grow(a: int, b: int, common_a: int, common_b: int, union_a: int, union_b: int,
                 excluded: int) -> None:
            cand_a = common_b & ~union_a & ~(a | b)
            cand_b = common_a & ~union_b & ~(a | b)
            open_ = (cand_a | cand_b) & ~excluded
            if not open_:
                if not (cand_a | cand_b):
                    found.append(Biclique.from_masks(a, b))
                return
            # An excluded candidate that no remaining addition can disqualify
            # blocks every leaf below this node.
            for x in bits(excluded & (cand_a | cand_b)):
                if cand_a >> x & 1:
                    if not (open_ & cand_b & ~masks[x]) and not (open_ & cand_a & masks[x]):
                        return
                elif not (open_ & cand_a & ~masks[x]) and not (open_ & cand_b & masks[x]):
                    return
            w = (open_ & -open_).bit_length() - 1
            bit = 1 << w
            if cand_a & bit:
                if not earliest_new_edge(w, b):
                    grow(a | bit, b, common_a & masks[w], common_b, union_a | masks[w], union_b, excluded)
            elif not earliest_new_edge(w, a):
                grow(a, b | bit, common_a, common_b & masks[w], union_a, union_b | masks[w], excluded)
            grow(a, b, common_a, common_b, union_a, union_b, excluded | bit)

        ua, vb = 1 << u, 1 << v
        grow(ua, vb, masks[u], masks[v], masks[u], masks[v], 0)

    found.sort()
    return found


@dataclass(frozen=True)
class EBHypergraph:
    """Edge-biclique hypergraph: universe is the EdgeIds of ``graph``."""

    graph: Graph
    hypergraph: Hypergraph
    bicliques: tuple[Biclique, ...]

    @property
    def hyperedges(self) -> tuple[tuple[int, ...], ...]:
        return self.hypergraph.hyperedges

    def labels(self, vertex_labels=None) -> list[list[str]]:
        return [[self.graph.edge_label(e, vertex_labels) for e in h] for h in self.hyperedges]


def eb_hypergraph(G: Graph) -> EBHypergraph:
    """Hyperedge k is the edge set of the k-th biclique in hyperedge order."""
    pairs = sorted((b.edge_ids(G), b) for b in enumerate_bicliques(G))
    return EBHypergraph(
        G,
        Hypergraph(G.m, tuple(h for h, _ in pairs)),
        tuple(b for _, b in pairs),
    )


def is_biclique(G: Graph, S) -> bool:
    """``S`` induces a complete bipartite graph and no single vertex extends it."""
    s = to_mask(S)
    if complete_bipartite_mask(G.masks, s) is None:
        return False
    return all(
        complete_bipartite_mask(G.masks, s | 1 << w) is None
        for w in range(G.n) if not s >> w & 1
    )


def edges_within(G: Graph, S) -> list[int]:
    s = to_mask(S)
    return [i for i, (u, v) in enumerate(G.edges) if s >> u & 1 and s >> v & 1]


