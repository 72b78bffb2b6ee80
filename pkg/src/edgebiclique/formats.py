"""Text formats: edge lists, graph6, and the hypergraph listing."""
from __future__ import annotations

from .graph import Graph, GraphError, build_graph


class FormatError(ValueError):
    """Malformed input text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional ``n <count>`` header.

    ``#`` starts a comment and blank lines are skipped.  Without a header the
    vertex count is one more than the largest id seen.
    """
    n = None
    pairs = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if tokens[0] == "n":
            if n is not None or pairs:
                raise FormatError("header 'n <count>' must come first and only once", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise FormatError(f"bad header {body!r}", lineno)
            n = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise FormatError(f"expected two non-negative integers, got {body!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno)
        pairs.append((u, v))
        lines.append(lineno)
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    for (u, v), lineno in zip(pairs, lines):
        if u >= n or v >= n:
            raise FormatError(f"vertex id out of range 0..{n - 1}", lineno)
    return build_graph(n, pairs)


def to_edge_list(G: Graph, header: bool = True) -> str:
    out = [f"n {G.n}"] if header else []
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(G: Graph) -> str:
    """graph6 line (no header, no newline)."""
    out = [_encode_n(G.n)]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        mask = G.masks[j]
        for i in range(j):
            acc = (acc << 1) | (mask >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise FormatError("empty graph6 string")
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"invalid graph6 byte {ch!r} at offset {pos}")
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    else:
        raise FormatError("truncated graph6 size field")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise FormatError(f"graph6 payload has {len(rest)} bytes, expected {need} for n={n}")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                pairs.append((i, j))
            k += 1
    return build_graph(n, pairs)


def looks_like_graph6(text: str) -> bool:
    body = text.strip()
    if body.startswith(">>graph6<<"):
        return True
    return bool(body) and "\n" not in body and all(63 <= ord(c) <= 126 for c in body)


def parse_graph_text(text: str, fmt: str | None = None) -> Graph:
    """Parse either format; ``fmt=None`` sniffs graph6 vs edge list."""
    if fmt is None:
        fmt = "graph6" if looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise FormatError(f"unknown format {fmt!r} (expected edgelist or graph6)")


def hypergraph_to_text(universe: int, hyperedges) -> str:
    out = [f"N {universe}"]
    out.extend(" ".join(map(str, h)) for h in hyperedges)
    return "\n".join(out) + "\n"


def parse_hypergraph_text(text: str):
    """Inverse of :func:`hypergraph_to_text`; returns a Hypergraph."""
    from .hypergraph import make_hypergraph

    universe = None
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if universe is None:
            if tokens[0] != "N" or len(tokens) != 2 or not tokens[1].isdigit():
                raise FormatError("expected header 'N <universe>'", lineno)
            universe = int(tokens[1])
            continue
        if not all(t.isdigit() for t in tokens):
            raise FormatError(f"non-integer member in {body!r}", lineno)
        sets.append([int(t) for t in tokens])
    if universe is None:
        raise FormatError("missing header 'N <universe>'")
    try:
        return make_hypergraph(universe, sets)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


__all__ = [
    "FormatError",
    "hypergraph_to_text",
    "looks_like_graph6",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph_text",
    "parse_hypergraph_text",
    "to_edge_list",
    "to_graph6",
]
