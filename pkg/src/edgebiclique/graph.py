"""Simple undirected graphs on dense vertex ids 0..n-1.

Edges are kept as a lexicographically sorted tuple of pairs ``(u, v)`` with
``u < v``; the position of a pair in that tuple is its EdgeId.  Every derived
object in the package (line graphs, hypergraphs on edges) is indexed by these
ids, so the ordering must never change.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input (loop, out-of-range id, bad set member)."""


class SizeCapError(ValueError):
    """An exact search was asked to run beyond its documented size cap."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n <= 64:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        else:
            # OR-ing into wide ints costs O(n) per edge; fill bit strings instead
            rows = [bytearray(b"0" * self.n) for _ in range(self.n)]
            top = self.n - 1
            for u, v in self.edges:
                rows[u][top - v] = 49
                rows[v][top - u] = 49
            masks = [int(row, 2) for row in rows]
        object.__setattr__(self, "masks", tuple(masks))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Pair -> EdgeId, built on first use."""
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(bits(mask)) for mask in self.masks)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.masks[v])

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def edge_label(self, e: int, labels: Sequence[str] | None = None) -> str:
        u, v = self.edges[e]
        if labels is None:
            return f"{u}{v}" if self.n <= 10 else f"{u}-{v}"
        if len(labels[u]) == len(labels[v]) == 1:
            return f"{labels[u]}{labels[v]}"
        return f"{labels[u]}-{labels[v]}"

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Canonical graph on ``n`` vertices; duplicate and reversed pairs collapse.

    Raises GraphError on loops or ids outside ``0..n-1``; the message carries
    the position of the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pos, pair in enumerate(pairs):
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair {pos}: vertex id out of range 0..{n - 1}: ({u}, {v})")
        if u == v:
            raise GraphError(f"pair {pos}: loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def from_masks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return Graph(n, tuple((u, v) for u in range(n) for v in bits(masks[u] >> (u + 1) << (u + 1))))


def _check_members(G: Graph, S: Iterable[int]) -> list[int]:
    members = sorted(set(S))
    for v in members:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph on {G.n} vertices")
    return members


def induced(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``S`` renumbered in ascending order, with the old->new map."""
    members = _check_members(G, S)
    new = {old: i for i, old in enumerate(members)}
    pairs = []
    for u in members:
        for v in bits(G.masks[u]):
            if v > u and v in new:
                pairs.append((new[u], new[v]))
    return Graph(len(members), tuple(sorted(pairs))), new


def complement(G: Graph) -> Graph:
    return Graph(G.n, tuple((u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shifted = [(u + G.n, v + G.n) for u, v in H.edges]
    return Graph(G.n + H.n, G.edges + tuple(shifted))


def is_complete_bipartite(G: Graph, S: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Bipartition ``(A, B)`` of ``G[S]`` with ``min(S)`` in ``A``, or None.

    Both sides must be nonempty, so singletons and edgeless sets are rejected.
    """
    members = _check_members(G, S)
    if len(members) < 2:
        return None
    side = complete_bipartite_mask(G.masks, to_mask(members))
    if side is None:
        return None
    a, b = side
    return tuple(bits(a)), tuple(bits(b))


def complete_bipartite_mask(masks: Sequence[int], s: int) -> tuple[int, int] | None:
    """Bitmask version of :func:`is_complete_bipartite` (no range checks)."""
    if s == 0:
        return None
    v0 = (s & -s).bit_length() - 1
    b = s & masks[v0]
    if not b:
        return None
    a = s & ~b
    for v in bits(a):
        if masks[v] & s != b:
            return None
    for v in bits(b):
        if masks[v] & s != a:
            return None
    return a, b


def line_graph(G: Graph) -> Graph:
    """Ordinary line graph; vertex i is EdgeId i of ``G``."""
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(G.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for ids in incident:
        pairs.update(combinations(ids, 2))
    return Graph(G.m, tuple(sorted(pairs)))


def maximal_cliques(G: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, each sorted, in lexicographic order (Bron-Kerbosch with pivot)."""
    masks = G.masks
    found: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(tuple(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: (masks[u] & p).bit_count())
        for v in bits(p & ~masks[pivot]):
            bit = 1 << v
            expand(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    if G.n:
        expand(0, (1 << G.n) - 1, 0)
    found.sort()
    return found


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    members = list(S)
    return all(G.has_edge(u, v) for u, v in combinations(members, 2))


ISO_CAP = 12


def is_isomorphic(G: Graph, H: Graph) -> dict[int, int] | None:
    """First adjacency-preserving bijection ``V(G) -> V(H)`` in lexicographic order, or None.

    Candidates for each vertex are pruned by degree and by the sorted degree
    multiset of the neighbourhood.  Both graphs are capped at 12 vertices.
    """
    if G.n > ISO_CAP or H.n > ISO_CAP:
        raise SizeCapError(f"is_isomorphic is capped at {ISO_CAP} vertices (got {G.n}, {H.n})")
    if G.n != H.n or G.m != H.m:
        return None

    def signature(K: Graph, v: int) -> tuple:
        return K.degree(v), tuple(sorted(K.degree(w) for w in K.neighbors(v)))

    sig_g = [signature(G, v) for v in range(G.n)]
    sig_h = [signature(H, v) for v in range(H.n)]
    if sorted(sig_g) != sorted(sig_h):
        return None
    candidates = [[w for w in range(H.n) if sig_h[w] == sig_g[v]] for v in range(G.n)]
    image = [-1] * G.n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == G.n:
            return True
        for w in candidates[v]:
            if used >> w & 1:
                continue
            if all(G.has_edge(u, v) == H.has_edge(image[u], w) for u in range(v)):
                image[v] = w
                used |= 1 << w
                if extend(v + 1):
                    return True
                used &= ~(1 << w)
        return False

    if extend(0):
        return dict(enumerate(image))
    return None


def to_dot(G: Graph, labels: Sequence[str] | None = None, name: str = "") -> str:
    head = f"graph {name} {{" if name else "graph {"
    lines = [head]
    for v in range(G.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{labels[v]}"];')
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
