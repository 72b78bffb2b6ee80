"""Named small graphs with fixed vertex labelings."""
from __future__ import annotations

import re
from itertools import combinations

from .graph import Graph, build_graph

# a..f = 0..5; triangles abc, def; rungs ad, be, cf.
PRISM_LABELS = ("a", "b", "c", "d", "e", "f")

# Case-1 templates: z, 1, 2, 3, x1, x2, x3 = 0..6.
_CASE1_LABELS = ("z", "1", "2", "3", "x1", "x2", "x3")
_CASE1_BASE = [(0, 1), (0, 2), (0, 3)]
# Per template, the neighbours of x1, x2, x3 among the base (no x-x edges).
_CASE1_X = [
    ((2, 3), (1, 3), (1, 2)),
    ((0, 1), (1, 3), (1, 2)),
    ((0, 1), (0, 2), (1, 2)),
    ((0, 1), (0, 2), (0, 3)),
]

# Case-2 templates: 1, 1', 2, 2', 3, 3', x1, x2, x3 = 0..8.
_CASE2_LABELS = ("1", "1'", "2", "2'", "3", "3'", "x1", "x2", "x3")
_CASE2_BASE = [(u, v) for u in (0, 2, 4) for v in (1, 3, 5)]
_CASE2_X = [
    ((1, 2, 4), (3, 0, 4), (5, 0, 2)),
    ((1, 2, 4), (3, 0, 4), (4, 1, 3)),
]


def _btemplates() -> list[tuple[Graph, tuple[str, ...]]]:
    out = []
    for xs in _CASE1_X:
        pairs = list(_CASE1_BASE)
        for k, nbrs in enumerate(xs):
            pairs.extend((4 + k, w) for w in nbrs)
        out.append((build_graph(7, pairs), _CASE1_LABELS))
    for xs in _CASE2_X:
        pairs = list(_CASE2_BASE)
        for k, nbrs in enumerate(xs):
            pairs.extend((6 + k, w) for w in nbrs)
        out.append((build_graph(9, pairs), _CASE2_LABELS))
    return out


def cycle(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    return build_graph(k, combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_FIXED = {
    "prism": lambda: (
        build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]),
        PRISM_LABELS,
    ),
    "claw": lambda: (build_graph(4, [(0, 1), (0, 2), (0, 3)]), None),
    "diamond": lambda: (build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]), None),
    "paw": lambda: (build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]), None),
}

NAMES = (
    "prism", "claw", "diamond", "paw", "C<k> (k>=3)", "K<k>", "K<m>,<n>", "P<k>",
    "btemplate-<i> (i=1..6)",
)


def catalog_labeled(name: str) -> tuple[Graph, tuple[str, ...] | None]:
    """Graph and optional display labels for a catalog name."""
    if name in _FIXED:
        return _FIXED[name]()
    if m := re.fullmatch(r"C(\d+)", name):
        k = int(m[1])
        if k >= 3:
            return cycle(k), None
    elif m := re.fullmatch(r"K(\d+),(\d+)", name):
        return complete_bipartite(int(m[1]), int(m[2])), None
    elif m := re.fullmatch(r"K(\d+)", name):
        return complete(int(m[1])), None
    elif m := re.fullmatch(r"P(\d+)", name):
        if int(m[1]) >= 1:
            return path(int(m[1])), None
    elif m := re.fullmatch(r"btemplate-(\d)", name):
        i = int(m[1])
        if 1 <= i <= 6:
            return _btemplates()[i - 1]
    raise KeyError(f"unknown catalog graph {name!r}; valid names: {', '.join(NAMES)}")


def catalog(name: str) -> Graph:
    return catalog_labeled(name)[0]
