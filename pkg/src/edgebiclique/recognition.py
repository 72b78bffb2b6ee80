"""Recognizers for the structural properties of edge-biclique hypergraphs.

Each recognizer returns a :class:`Verdict`.  Failures carry a witness that can
be re-checked on its own (``witness.verify(...)``) without re-running the
search that produced it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .blg import biclique_line_graph
from .catalog import catalog
from .graph import Graph, SizeCapError, bits, complete_bipartite_mask, to_mask
from .hypergraph import Verdict, clique_hypergraph, is_helly

PATTERN_CAP = 10


@dataclass(frozen=True)
class Embedding:
    """Pattern vertex ``i`` sits at host vertex ``image[i]``; adjacency and non-adjacency preserved."""

    pattern: str
    image: tuple[int, ...]

    def verify(self, host: Graph) -> bool:
        pat = catalog(self.pattern)
        if len(set(self.image)) != len(self.image) or len(self.image) != pat.n:
            return False
        if any(not 0 <= h < host.n for h in self.image):
            return False
        return all(
            pat.has_edge(p, q) == host.has_edge(self.image[p], self.image[q])
            for p, q in combinations(range(pat.n), 2)
        )

    def as_dict(self) -> dict:
        return {"kind": "embedding", "pattern": self.pattern, "image": list(self.image)}


@dataclass(frozen=True)
class ExtendedTriangleWitness:
    """A triangle whose extended triangle has no universal vertex."""

    triangle: tuple[int, int, int]
    members: tuple[int, ...]

    def verify(self, G: Graph) -> bool:
        a, b, c = self.triangle
        if not (G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c)):
            return False
        if tuple(extended_triangle(G, a, b, c)) != tuple(self.members):
            return False
        return universal_vertex(G, to_mask(self.members)) is None

    def as_dict(self) -> dict:
        return {"kind": "extended_triangle", "triangle": list(self.triangle), "members": list(self.members)}


@dataclass(frozen=True)
class BTemplateWitness:
    """Induced B-template.

    ``base`` is ``(z, 1, 2, 3)`` for case 1 and ``(1, 1', 2, 2', 3, 3')`` for
    case 2; ``xs[i]`` is the extra vertex attached to position ``i``.
    """

    case: int
    base: tuple[int, ...]
    xs: tuple[int, int, int]

    def verify(self, G: Graph) -> bool:
        base = to_mask(self.base)
        if len(set(self.base + self.xs)) != len(self.base) + 3:
            return False
        if self.case == 1:
            z, *leaves = self.base
            side = complete_bipartite_mask(G.masks, base)
            if side is None or side != _sides(1 << z, to_mask(leaves)):
                return False
            return all(_case1_ok(G.masks, base, 1 << leaves[i], self.xs[i]) for i in range(3))
        if self.case == 2:
            ones, primes = self.base[0::2], self.base[1::2]
            side = complete_bipartite_mask(G.masks, base)
            if side is None or side != _sides(to_mask(ones), to_mask(primes)):
                return False
            return all(_case2_ok(G.masks, base, 1 << ones[i], 1 << primes[i], self.xs[i]) for i in range(3))
        return False

    def as_dict(self) -> dict:
        return {"kind": "btemplate", "case": self.case, "base": list(self.base), "xs": list(self.xs)}


def _sides(a: int, b: int) -> tuple[int, int]:
    return (a, b) if (a & -a) < (b & -b) else (b, a)


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Lexicographically first induced embedding of ``pattern`` into ``host``, or None."""
    k = pattern.n
    if k > PATTERN_CAP:
        raise SizeCapError(f"find_induced is capped at {PATTERN_CAP} pattern vertices (got {k})")
    if k > host.n:
        return None
    hm, pm = host.masks, pattern.masks
    enough = [0] * k
    for p in range(k):
        d = pattern.degree(p)
        enough[p] = to_mask(h for h in range(host.n) if host.degree(h) >= d)
    image = [0] * k
    full = (1 << host.n) - 1

    def extend(p: int, used: int) -> bool:
        if p == k:
            return True
        cand = enough[p] & ~used
        for q in range(p):
            cand &= hm[image[q]] if pm[p] >> q & 1 else full & ~hm[image[q]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[p] = low.bit_length() - 1
            if extend(p + 1, used | low):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def _pattern_verdict(G: Graph, names: tuple[str, ...]) -> Verdict:
    for name in names:
        found = find_induced(G, catalog(name))
        if found is not None:
            return Verdict(False, Embedding(name, found))
    return Verdict(True)


def is_eb_conformal(G: Graph) -> Verdict:
    """EB(G) is conformal exactly when G has no induced triangular prism."""
    return _pattern_verdict(G, ("prism",))


def extended_triangle(G: Graph, a: int, b: int, c: int) -> list[int]:
    """Vertices adjacent to at least two of ``a, b, c`` (the triangle itself included)."""
    ma, mb, mc = G.masks[a], G.masks[b], G.masks[c]
    return bits((ma & mb) | (ma & mc) | (mb & mc) | 1 << a | 1 << b | 1 << c)


def universal_vertex(G: Graph, members: int) -> int | None:
    for u in bits(members):
        if members & ~(1 << u) & ~G.masks[u] == 0:
            return u
    return None


def triangles(G: Graph) -> Iterator[tuple[int, int, int]]:
    masks = G.masks
    for a, b in G.edges:
        for c in bits(masks[a] & masks[b] & ~((1 << (b + 1)) - 1)):
            yield a, b, c


def is_clique_helly(H: Graph, brute: bool = False) -> Verdict:
    """Whether the maximal cliques of ``H`` form a Helly family.

    Default route: every extended triangle must contain a universal vertex.
    ``brute=True`` runs the Helly test on the clique hypergraph instead.
    """
    if brute:
        return is_helly(clique_hypergraph(H))
    seen = set()
    for a, b, c in triangles(H):
        members = extended_triangle(H, a, b, c)
        key = to_mask(members)
        if key in seen:
            continue
        seen.add(key)
        if universal_vertex(H, key) is None:
            return Verdict(False, ExtendedTriangleWitness((a, b, c), tuple(members)))
    return Verdict(True)


def is_eb_helly(G: Graph) -> Verdict:
    """EB(G) is Helly iff the clique hypergraph of L_G is; witness lives on L_G (EdgeIds)."""
    return is_clique_helly(biclique_line_graph(G).graph)


def _case1_ok(masks, base: int, leaf: int, x: int) -> bool:
    bit = 1 << x
    return (
        complete_bipartite_mask(masks, base & ~leaf | bit) is not None
        and complete_bipartite_mask(masks, base | bit) is None
    )


def _case2_ok(masks, base: int, one: int, prime: int, x: int) -> bool:
    bit = 1 << x
    return (
        complete_bipartite_mask(masks, base & ~(one | prime) | bit) is not None
        and complete_bipartite_mask(masks, base & ~one | bit) is None
        and complete_bipartite_mask(masks, base & ~prime | bit) is None
    )


def _distinct_pick(cands: list[list[int]]) -> tuple[int, int, int] | None:
    for x1 in cands[0]:
        for x2 in cands[1]:
            if x2 == x1:
                continue
            for x3 in cands[2]:
                if x3 != x1 and x3 != x2:
                    return x1, x2, x3
    return None


def _independent_triples(G: Graph, pool: int) -> Iterator[tuple[int, int, int]]:
    masks = G.masks
    for a in bits(pool):
        rest_a = pool & ~masks[a] & ~((1 << (a + 1)) - 1)
        for b in bits(rest_a):
            for c in bits(rest_a & ~masks[b] & ~((1 << (b + 1)) - 1)):
                yield a, b, c


def find_b_template(G: Graph) -> BTemplateWitness | None:
    """First induced B-template: case 1 (claw base) before case 2 (K_{3,3} base).

    Bases are enumerated in lexicographic order; for each base and each of its
    three positions the admissible extra vertices are collected, and the first
    choice of three distinct ones wins.  Edges among the extra vertices are
    unconstrained.
    """
    masks = G.masks
    everything = (1 << G.n) - 1
    for z in range(G.n):
        for leaves in _independent_triples(G, masks[z]):
            base = 1 << z | to_mask(leaves)
            outside = bits(everything & ~base)
            cands = [[x for x in outside if _case1_ok(masks, base, 1 << leaf, x)] for leaf in leaves]
            pick = _distinct_pick(cands)
            if pick is not None:
                return BTemplateWitness(1, (z, *leaves), pick)
    for ones in _independent_triples(G, everything):
        common = masks[ones[0]] & masks[ones[1]] & masks[ones[2]] & ~((1 << (ones[0] + 1)) - 1)
        for primes in _independent_triples(G, common):
            base = to_mask(ones) | to_mask(primes)
            outside = bits(everything & ~base)
            for order in permutations(primes):
                cands = [
                    [x for x in outside if _case2_ok(masks, base, 1 << ones[i], 1 << order[i], x)]
                    for i in range(3)
                ]
                pick = _distinct_pick(cands)
                if pick is not None:
                    flat = (ones[0], order[0], ones[1], order[1], ones[2], order[2])
                    return BTemplateWitness(2, flat, pick)
    return None


def is_eb_hereditary_helly(G: Graph) -> Verdict:
    """No induced prism and no induced B-template."""
    verdict = is_eb_conformal(G)
    if not verdict:
        return verdict
    found = find_b_template(G)
    if found is not None:
        return Verdict(False, found)
    return Verdict(True)


def is_hereditary_blg(H: Graph) -> Verdict:
    """Every induced subgraph of ``H`` is a biclique line graph iff no induced claw, diamond or C4."""
    return _pattern_verdict(H, ("claw", "diamond", "C4"))
