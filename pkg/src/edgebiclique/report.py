"""JSON reports for one input graph, and standalone witness re-verification."""
from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Sequence

from . import __version__
from .biclique import eb_hypergraph
from .blg import biclique_line_graph
from .formats import parse_graph6, to_graph6
from .graph import Graph
from .hypergraph import Verdict
from .recognition import (
    BTemplateWitness,
    Embedding,
    ExtendedTriangleWitness,
    is_eb_conformal,
    is_eb_helly,
    is_eb_hereditary_helly,
    is_hereditary_blg,
)

SCHEMA = "edgebiclique.report/1"
PROPERTIES = ("conformal", "helly", "hhelly", "hblg")
VERDICT_KEYS = {"conformal": "conformal", "helly": "helly", "hhelly": "hereditary_helly", "hblg": "hereditary_blg"}
RECOGNIZERS = {
    "conformal": is_eb_conformal,
    "helly": is_eb_helly,
    "hhelly": is_eb_hereditary_helly,
    "hblg": is_hereditary_blg,
}
# which graph a witness lives on: the input, or its biclique line graph
WITNESS_HOST = {"conformal": "graph", "helly": "lg", "hhelly": "graph", "hblg": "graph"}


class Timer:
    def __init__(self) -> None:
        self.ms: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.ms[name] = round((time.perf_counter() - start) * 1000.0, 3)


def witness_to_dict(witness) -> dict | None:
    if witness is None:
        return None
    return witness.as_dict()


def witness_from_dict(data: dict | None):
    if data is None:
        return None
    kind = data["kind"]
    if kind == "embedding":
        return Embedding(data["pattern"], tuple(data["image"]))
    if kind == "extended_triangle":
        return ExtendedTriangleWitness(tuple(data["triangle"]), tuple(data["members"]))
    if kind == "btemplate":
        return BTemplateWitness(data["case"], tuple(data["base"]), tuple(data["xs"]))
    raise ValueError(f"unknown witness kind {kind!r}")


def build_report(
    G: Graph,
    source: str,
    fmt: str,
    which: Sequence[str] = PROPERTIES,
    labels: Sequence[str] | None = None,
    seed: int | None = None,
) -> dict:
    timer = Timer()
    with timer.stage("bicliques"):
        eb = eb_hypergraph(G)
    with timer.stage("lg"):
        lg = biclique_line_graph(G).graph
    verdicts: dict[str, dict] = {}
    for prop in which:
        with timer.stage(prop):
            v: Verdict = RECOGNIZERS[prop](G)
        verdicts[VERDICT_KEYS[prop]] = {"answer": v.answer, "witness": witness_to_dict(v.witness)}
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "input": {
            "source": source,
            "format": fmt,
            "n": G.n,
            "m": G.m,
            "graph6": to_graph6(G),
            "labels": list(labels) if labels is not None else None,
        },
        "bicliques": [
            {"vertices": list(b.vertices), "side_a": list(b.side_a), "side_b": list(b.side_b)}
            for b in sorted(eb.bicliques)
        ],
        "eb": {
            "universe": G.m,
            "hyperedges": [list(h) for h in eb.hyperedges],
            "labels": eb.labels(labels),
        },
        "lg": {"n": lg.n, "m": lg.m, "graph6": to_graph6(lg)},
        "verdicts": verdicts,
        "seed": seed,
        "timings_ms": timer.ms,
    }


def verify_report(report: dict) -> list[tuple[str, bool, str]]:
    """Re-check every verdict of a report against its embedded graph.

    Returns ``(property, ok, detail)`` triples.  A failing verdict is accepted
    when its witness verifies; a holding verdict is accepted when the
    recognizer agrees on the decoded graph.
    """
    G = parse_graph6(report["input"]["graph6"])
    hosts = {"graph": G}
    if report["input"]["m"] != G.m:
        return [("input", False, "edge count does not match embedded graph6")]
    out = []
    by_key = {v: k for k, v in VERDICT_KEYS.items()}
    for key, entry in report["verdicts"].items():
        prop = by_key[key]
        witness = witness_from_dict(entry["witness"])
        if entry["answer"]:
            ok = witness is None and RECOGNIZERS[prop](G).answer
            out.append((key, ok, "holds" if ok else "recognizer disagrees"))
            continue
        if witness is None:
            out.append((key, False, "failing verdict without witness"))
            continue
        host_kind = WITNESS_HOST[prop]
        if host_kind not in hosts:
            hosts[host_kind] = biclique_line_graph(G).graph
        ok = witness.verify(hosts[host_kind])
        out.append((key, ok, f"{witness.as_dict()['kind']} witness {'verified' if ok else 'REJECTED'}"))
    return out
