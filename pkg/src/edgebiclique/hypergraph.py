"""Finite hypergraphs: dual, 2-section, line graph, reduction, Helly and conformality."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, maximal_cliques, to_mask


@dataclass(frozen=True)
class Hypergraph:
    """Universe ``0..universe-1`` and a sorted, duplicate-free family of nonempty sorted sets."""

    universe: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.hyperedges)

    def masks(self) -> list[int]:
        return [to_mask(h) for h in self.hyperedges]


def make_hypergraph(universe: int, sets: Iterable[Iterable[int]]) -> Hypergraph:
    family = set()
    for k, s in enumerate(sets):
        h = tuple(sorted(set(s)))
        if not h:
            raise GraphError(f"hyperedge {k} is empty")
        if h[0] < 0 or h[-1] >= universe:
            raise GraphError(f"hyperedge {k} has a member outside 0..{universe - 1}")
        family.add(h)
    return Hypergraph(universe, tuple(sorted(family)))


@dataclass(frozen=True)
class SubfamilyWitness:
    """Hyperedge indices that pairwise intersect but share no common element."""

    indices: tuple[int, ...]

    def verify(self, H: Hypergraph) -> bool:
        sets = [set(H.hyperedges[i]) for i in self.indices]
        if len(sets) < 2:
            return False
        if any(not (a & b) for a, b in combinations(sets, 2)):
            return False
        return not set.intersection(*sets)


@dataclass(frozen=True)
class CliqueWitness:
    """A maximal clique of the 2-section contained in no hyperedge."""

    clique: tuple[int, ...]

    def verify(self, H: Hypergraph) -> bool:
        return (
            to_mask(self.clique) & covered(H) != 0
            and tuple(self.clique) in maximal_cliques(two_section(H))
            and not any(set(self.clique) <= set(h) for h in H.hyperedges)
        )


@dataclass(frozen=True)
class Verdict:
    answer: bool
    witness: object | None = None

    def __bool__(self) -> bool:
        return self.answer


def dual(H: Hypergraph) -> Hypergraph:
    """Hyperedges become vertices; vertices in no hyperedge are dropped and equal sets collapse."""
    incidence: list[list[int]] = [[] for _ in range(H.universe)]
    for k, h in enumerate(H.hyperedges):
        for v in h:
            incidence[v].append(k)
    return make_hypergraph(len(H.hyperedges), (s for s in incidence if s))


def two_section(H: Hypergraph) -> Graph:
    pairs = set()
    for h in H.hyperedges:
        pairs.update(combinations(h, 2))
    return Graph(H.universe, tuple(sorted(pairs)))


def hyper_line_graph(H: Hypergraph) -> Graph:
    masks = H.masks()
    pairs = [(i, j) for i, j in combinations(range(len(masks)), 2) if masks[i] & masks[j]]
    return Graph(len(masks), tuple(pairs))


def reduction(H: Hypergraph) -> Hypergraph:
    masks = H.masks()
    keep = [
        h for i, h in enumerate(H.hyperedges)
        if not any(j != i and masks[i] & masks[j] == masks[i] and masks[i] != masks[j] for j in range(len(masks)))
    ]
    return Hypergraph(H.universe, tuple(keep))


def is_reduced(H: Hypergraph) -> bool:
    return len(reduction(H)) == len(H)


def is_helly(H: Hypergraph) -> Verdict:
    """Helly test by Berge's triple criterion.

    The family is Helly iff, for every three distinct vertices, the hyperedges
    containing at least two of them have a common element.  The failing
    subfamily for the first bad triple (in lexicographic order) is returned as
    the witness: any two of its members share one of the three vertices.
    """
    masks = H.masks()
    containing: list[int] = [0] * H.universe
    for k, mk in enumerate(masks):
        for v in bits(mk):
            containing[v] |= 1 << k
    full = (1 << H.universe) - 1
    for a, b, c in combinations(range(H.universe), 3):
        ab, ac, bc = containing[a] & containing[b], containing[a] & containing[c], containing[b] & containing[c]
        family = ab | ac | bc
        if family & (family - 1) == 0:
            continue
        common = full
        for k in bits(family):
            common &= masks[k]
            if not common:
                return Verdict(False, SubfamilyWitness(tuple(bits(family))))
    return Verdict(True)


def covered(H: Hypergraph) -> int:
    """Mask of the vertices lying in at least one hyperedge."""
    out = 0
    for mk in H.masks():
        out |= mk
    return out


def is_conformal(H: Hypergraph) -> Verdict:
    """Every maximal clique of the 2-section lies inside some hyperedge.

    Vertices in no hyperedge are not treated as part of the hypergraph (they
    would otherwise be singleton cliques contained in nothing).
    """
    masks = H.masks()
    cov = covered(H)
    for clique in maximal_cliques(two_section(H)):
        cm = to_mask(clique)
        if not cm & cov:
            continue
        if not any(cm & mk == cm for mk in masks):
            return Verdict(False, CliqueWitness(clique))
    return Verdict(True)


def clique_hypergraph(G: Graph) -> Hypergraph:
    return Hypergraph(G.n, tuple(maximal_cliques(G)))


def induced_subhypergraph(H: Hypergraph, A: Sequence[int]) -> Hypergraph:
    """Traces ``X & A`` of the hyperedges, renumbered onto ``A`` in ascending order."""
    members = sorted(set(A))
    new = {v: i for i, v in enumerate(members)}
    traces = ([new[v] for v in h if v in new] for h in H.hyperedges)
    return make_hypergraph(len(members), (t for t in traces if t))
