"""Biclique line graphs L_G and the triangle-free structure around them.

L_G has the edges of G as vertices; two edges are adjacent when some biclique
contains both.  It is built here from the local pairwise rule (shared endpoint
with non-adjacent far ends, or an induced 4-cycle on the four endpoints), which
must coincide with the 2-section of the edge-biclique hypergraph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Graph, GraphError, SizeCapError, bits, build_graph, complement, line_graph


@dataclass(frozen=True)
class LabeledLineGraph:
    graph: Graph
    source: Graph

    @property
    def label(self) -> tuple[int, ...]:
        # vertex i is EdgeId i of the source by construction
        return tuple(range(self.source.m))

    def vertex_names(self, labels: Sequence[str] | None = None) -> list[str]:
        return [self.source.edge_label(e, labels) for e in range(self.source.m)]


def _pair_adjacent(masks: Sequence[int], u: int, v: int, x: int, y: int) -> bool:
    if u == x:
        return not masks[v] >> y & 1
    if u == y:
        return not masks[v] >> x & 1
    if v == x:
        return not masks[u] >> y & 1
    if v == y:
        return not masks[u] >> x & 1
    mu, mv = masks[u], masks[v]
    ux, uy, vx, vy = mu >> x & 1, mu >> y & 1, mv >> x & 1, mv >> y & 1
    return bool((ux and vy and not uy and not vx) or (uy and vx and not ux and not vy))


def edges_adjacent(G: Graph, e: int, f: int) -> bool:
    """Whether EdgeIds ``e`` and ``f`` lie in a common biclique of ``G``."""
    if e == f:
        raise GraphError(f"edges_adjacent needs two distinct edges, got {e} twice")
    u, v = G.edges[e]
    x, y = G.edges[f]
    return _pair_adjacent(G.masks, u, v, x, y)


def biclique_line_graph(G: Graph) -> LabeledLineGraph:
    """L_G by testing every pair of edges; O(m^2) pair checks."""
    masks = G.masks
    edges = G.edges
    pairs = []
    for i, (u, v) in enumerate(edges):
        mu, mv = masks[u], masks[v]
        for j in range(i + 1, len(edges)):
            x, y = edges[j]
            if u == x:
                ok = not mv >> y & 1
            elif v == x:
                ok = not mu >> y & 1
            elif v == y:
                ok = not mu >> x & 1
            elif u == y:
                ok = not mv >> x & 1
            else:
                ux, uy, vx, vy = mu >> x & 1, mu >> y & 1, mv >> x & 1, mv >> y & 1
                ok = (ux and vy and not uy and not vx) or (uy and vx and not ux and not vy)
            if ok:
                pairs.append((i, j))
    return LabeledLineGraph(Graph(G.m, tuple(pairs)), G)


def has_triangle(G: Graph) -> bool:
    masks = G.masks
    return any(masks[u] & masks[v] for u, v in G.edges)


def _normalize_f(H: Graph, F: Iterable) -> set[tuple[int, int]]:
    out = set()
    for item in F:
        if isinstance(item, int):
            if not 0 <= item < H.m:
                raise GraphError(f"F contains EdgeId {item}, but H has {H.m} edges")
            out.add(H.edges[item])
            continue
        a, b = item
        pair = (a, b) if a < b else (b, a)
        if not (0 <= pair[0] and pair[1] < H.n and H.has_edge(*pair)):
            raise GraphError(f"F contains {pair}, which is not an edge of H")
        out.add(pair)
    return out


def induced_four_cycles(G: Graph) -> Iterator[tuple[int, int, int, int]]:
    """Induced 4-cycles as ``(a, b, c, d)`` with ``a`` smallest, ``b < d``, diagonals ``ac``, ``bd``."""
    masks = G.masks
    for a in range(G.n):
        for c in range(a + 1, G.n):
            if masks[a] >> c & 1:
                continue
            common = bits(masks[a] & masks[c] & ~((1 << (a + 1)) - 1))
            for b, d in combinations(common, 2):
                if not masks[b] >> d & 1:
                    yield a, b, c, d


def verify_f_decomposition(H: Graph, F: Iterable, G: Graph, edge_map: Sequence[int]) -> bool:
    """Check that ``F`` splits ``H`` into the line graph of triangle-free ``G`` plus 4-cycle diagonals.

    ``F`` holds edges of ``H`` (EdgeIds or vertex pairs); ``edge_map[p]`` is
    the EdgeId of ``G`` that vertex ``p`` of ``H`` stands for.
    """
    if len(edge_map) != H.n or sorted(edge_map) != list(range(G.m)):
        raise GraphError("edge_map must be a bijection from V(H) onto the EdgeIds of G")
    fset = _normalize_f(H, F)
    if has_triangle(G):
        return False
    rest = Graph(H.n, tuple(e for e in H.edges if e not in fset))
    line = line_graph(G)
    for p, q in combinations(range(H.n), 2):
        if rest.has_edge(p, q) != line.has_edge(edge_map[p], edge_map[q]):
            return False
    diagonals_of: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for a, b, c, d in induced_four_cycles(rest):
        ac, bd = (a, c), (b, d) if b < d else (d, b)
        if ac not in fset or bd not in fset:
            return False
        diagonals_of.setdefault(ac, set()).add(bd)
        diagonals_of.setdefault(bd, set()).add(ac)
    for pair in fset:
        if not any(other in fset for other in diagonals_of.get(pair, ())):
            return False
    return True


ROOT_CAP = 20


def root_graph(H: Graph) -> tuple[Graph, tuple[int, ...]] | None:
    """A graph ``G`` with ``L(G) = H`` and the map vertex-of-H -> EdgeId of G, or None.

    Searches for a Krausz partition: the edges of ``H`` split into cliques so
    that every vertex lies in at most two of them.  Cliques are tried largest
    first, so a triangle component comes back as the root K_{1,3} rather than
    K_3.  The search is exhaustive and capped at 20 vertices.
    """
    n = H.n
    if n > ROOT_CAP:
        raise SizeCapError(f"root_graph is capped at {ROOT_CAP} vertices (got {n})")
    open_edges = list(H.masks)
    count = [0] * n
    parts: list[int] = []

    def clique_extensions(chosen: int, cand: int) -> Iterator[int]:
        if not cand:
            yield chosen
            return
        w = (cand & -cand).bit_length() - 1
        yield from clique_extensions(chosen | 1 << w, cand & open_edges[w])
        yield from clique_extensions(chosen, cand & ~(1 << w))

    def cover(part: int, sign: int) -> None:
        for w in bits(part):
            count[w] += sign
            if sign > 0:
                open_edges[w] &= ~part
            else:
                open_edges[w] |= part & ~(1 << w) & H.masks[w]

    def solve() -> bool:
        u = next((w for w in range(n) if open_edges[w]), None)
        if u is None:
            return True
        v = (open_edges[u] & -open_edges[u]).bit_length() - 1
        if count[u] == 2 or count[v] == 2:
            return False
        base = 1 << u | 1 << v
        cand = open_edges[u] & open_edges[v]
        cand = sum(1 << w for w in bits(cand) if count[w] < 2)
        required = 0
        if count[u] == 1:
            required |= open_edges[u]
        if count[v] == 1:
            required |= open_edges[v]
        required &= ~base
        if required & ~cand:
            return False
        for w in bits(required):
            if required & ~open_edges[w] & ~(1 << w):
                return False
        start = cand
        for w in bits(required):
            start &= open_edges[w]
        for part in clique_extensions(base | required, start & ~required):
            cover(part, +1)
            ok = all(count[w] < 2 or not open_edges[w] for w in bits(part))
            if ok:
                parts.append(part)
                if solve():
                    return True
                parts.pop()
            cover(part, -1)
        return False

    if not solve():
        return None
    membership: list[list[int]] = [[] for _ in range(n)]
    for k, part in enumerate(parts):
        for w in bits(part):
            membership[w].append(k)
    next_vertex = len(parts)
    ends = []
    for w in range(n):
        ms = list(membership[w])
        while len(ms) < 2:
            ms.append(next_vertex)
            next_vertex += 1
        ends.append(tuple(ms))
    G = build_graph(next_vertex, ends)
    if G.m != n:
        raise AssertionError("Krausz partition produced parallel root edges")
    return G, tuple(G.edge_id(*e) for e in ends)


def embed_apex(G: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Complement of ``G`` plus a universal vertex; the apex edges induce ``G`` in L_{G'}."""
    comp = complement(G)
    apex = G.n
    host = build_graph(G.n + 1, list(comp.edges) + [(x, apex) for x in range(G.n)])
    return host, tuple(host.edge_id(x, apex) for x in range(G.n))


def embed_double(G: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Two copies of ``G`` joined by the rungs ``u_1 u_2``; the rungs induce ``G`` in L_{G'}."""
    n = G.n
    pairs = list(G.edges) + [(u + n, v + n) for u, v in G.edges] + [(u, u + n) for u in range(n)]
    host = build_graph(2 * n, pairs)
    return host, tuple(host.edge_id(u, u + n) for u in range(n))


@dataclass(frozen=True)
class FDecomposition:
    F: tuple[tuple[int, int], ...]
    root: Graph
    edge_map: tuple[int, ...]


F_SEARCH_CAP = 20


def iter_f_decompositions(H: Graph) -> Iterator[FDecomposition]:
    """Every valid ``F`` (by size, then lexicographically) with its triangle-free root."""
    if H.m > F_SEARCH_CAP:
        raise SizeCapError(f"F-decomposition search is capped at {F_SEARCH_CAP} edges (got {H.m})")
    for size in range(H.m + 1):
        for F in combinations(H.edges, size):
            fset = set(F)
            rest = Graph(H.n, tuple(e for e in H.edges if e not in fset))
            found = root_graph(rest)
            if found is None:
                continue
            root, edge_map = found
            if has_triangle(root):
                continue
            if verify_f_decomposition(H, F, root, edge_map):
                yield FDecomposition(tuple(F), root, edge_map)
