"""Seeded oracle-equivalence sweeps over random graphs."""
from __future__ import annotations

import csv
import io
import itertools
import random
import time
from dataclasses import dataclass, field

from .biclique import eb_hypergraph, enumerate_bicliques
from .blg import biclique_line_graph
from .catalog import catalog
from .graph import Graph, maximal_cliques
from .hypergraph import is_conformal, is_helly, two_section
from .oracle import brute_bicliques, brute_hereditary_helly, exhaustive_helly, random_graph
from .recognition import is_clique_helly, is_eb_conformal, is_eb_helly, is_eb_hereditary_helly

COLUMNS = ("seed", "n", "p", "m", "bicliques", "conformal", "helly", "hhelly", "agree_flags", "ms_per_stage")
CHECKS = ("bicliques", "lg", "conformal", "helly", "hhelly")


@dataclass
class Row:
    seed: int | None
    n: int
    p: float | None
    m: int = 0
    bicliques: int = 0
    conformal: bool | None = None
    helly: bool | None = None
    hhelly: bool | None = None
    agree: dict[str, bool] = field(default_factory=dict)
    ms: dict[str, float] = field(default_factory=dict)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(self.agree.values())

    def as_csv(self, timings: bool = True) -> list[str]:
        flags = "|".join(f"{k}:{int(v)}" for k, v in self.agree.items())
        if self.error is not None:
            flags = f"error:{self.error}"
        ms = "|".join(f"{k}:{v:.3f}" for k, v in self.ms.items()) if timings else ""

        def b(x):
            return "" if x is None else str(x).lower()

        return [
            "" if self.seed is None else str(self.seed),
            str(self.n),
            "" if self.p is None else f"{self.p:g}",
            str(self.m),
            str(self.bicliques),
            b(self.conformal),
            b(self.helly),
            b(self.hhelly),
            flags,
            ms,
        ]


def check_graph(G: Graph, row: Row) -> Row:
    """Run every fast path and its oracle on ``G``, filling ``row``."""
    row.m = G.m
    stamp = time.perf_counter

    def timed(name, fn, *args):
        start = stamp()
        out = fn(*args)
        row.ms[name] = row.ms.get(name, 0.0) + (stamp() - start) * 1000.0
        return out

    try:
        fast = timed("enum", enumerate_bicliques, G)
        row.bicliques = len(fast)
        row.agree["bicliques"] = fast == timed("brute_enum", brute_bicliques, G)
        eb = timed("eb", eb_hypergraph, G).hypergraph
        lg = timed("lg", biclique_line_graph, G).graph
        row.agree["lg"] = lg == two_section(eb)
        row.conformal = timed("conformal", is_eb_conformal, G).answer
        same_cliques = set(eb.hyperedges) == set(maximal_cliques(lg))
        row.agree["conformal"] = row.conformal == is_conformal(eb).answer == same_cliques
        row.helly = timed("helly", is_eb_helly, G).answer
        row.agree["helly"] = (
            row.helly == is_helly(eb).answer == is_clique_helly(lg).answer == timed("brute_helly", exhaustive_helly, eb)
        )
        row.hhelly = timed("hhelly", is_eb_hereditary_helly, G).answer
        row.agree["hhelly"] = row.hhelly == timed("brute_hhelly", brute_hereditary_helly, G).answer
    except ValueError as exc:
        row.error = f"{type(exc).__name__}: {exc}".replace(",", ";")
    return row


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


@dataclass(frozen=True)
class EnsembleConfig:
    n_values: tuple[int, ...] = (6, 7, 8)
    p_values: tuple[float, ...] = (0.2, 0.4, 0.6)
    count: int = 10
    seed: int = 0
    catalog_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError(f"count must be non-negative, got {self.count}")
        for p in self.p_values:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"edge probability {p} outside [0, 1]")


def run_ensemble(config: EnsembleConfig) -> list[Row]:
    """Instance ``i`` uses the ``i``-th (n, p) combination cyclically and its own drawn seed."""
    master = random.Random(config.seed)
    combos = list(itertools.product(config.n_values, config.p_values))
    rows = []
    for i in range(config.count):
        n, p = combos[i % len(combos)]
        instance_seed = master.getrandbits(64)
        G = random_graph(n, p, random.Random(instance_seed))
        rows.append(check_graph(G, Row(instance_seed, n, p)))
    for name in config.catalog_names:
        G = catalog(name)
        rows.append(check_graph(G, Row(None, G.n, None)))
    return rows


def rows_to_csv(rows: list[Row], timings: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv(timings))
    return buf.getvalue()
