"""Command-line front end.

Exit codes: 0 when the checked property holds (or a listing succeeded), 1 when
it fails or an oracle disagrees, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .biclique import eb_hypergraph, enumerate_bicliques
from .blg import biclique_line_graph
from .catalog import catalog_labeled
from .ensemble import EnsembleConfig, parse_range, rows_to_csv, run_ensemble
from .formats import (
    FormatError,
    hypergraph_to_text,
    looks_like_graph6,
    parse_graph_text,
    to_edge_list,
    to_graph6,
)
from .graph import Graph, GraphError, SizeCapError, to_dot
from .hypergraph import is_helly
from .oracle import brute_bicliques, brute_hereditary_helly, exhaustive_helly
from .report import PROPERTIES, VERDICT_KEYS, build_report, verify_report
from .recognition import is_eb_helly, is_eb_hereditary_helly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def load_input(spec: str, fmt: str | None) -> tuple[Graph, str, tuple[str, ...] | None]:
    """Resolve ``catalog:NAME``, ``-`` (stdin) or a file path."""
    if spec.startswith("catalog:"):
        try:
            G, labels = catalog_labeled(spec[len("catalog:"):])
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        return G, "catalog", labels
    if spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror}") from None
    try:
        G = parse_graph_text(text, fmt)
    except (FormatError, GraphError) as exc:
        raise InputError(f"{spec}: {exc}") from None
    if fmt is None:
        fmt = "graph6" if looks_like_graph6(text) else "edgelist"
    return G, fmt, None


def _name(v: int, labels) -> str:
    return labels[v] if labels else str(v)


def describe_witness(key: str, witness: dict | None, G: Graph, labels) -> str:
    if witness is None:
        return ""
    kind = witness["kind"]
    if kind == "embedding":
        verts = " ".join(_name(v, labels) for v in witness["image"])
        return f"induced {witness['pattern']} on {verts}"
    if kind == "btemplate":
        base = " ".join(_name(v, labels) for v in witness["base"])
        xs = " ".join(_name(v, labels) for v in witness["xs"])
        return f"B-template case {witness['case']}: base {base}; x1 x2 x3 = {xs}"
    if kind == "extended_triangle":
        tri = " ".join(G.edge_label(e, labels) for e in witness["triangle"])
        members = " ".join(G.edge_label(e, labels) for e in witness["members"])
        return f"extended triangle of L_G at {{{tri}}} = {{{members}}} has no universal vertex"
    return json.dumps(witness)


def cmd_check(args) -> int:
    G, fmt, labels = load_input(args.input, args.input_format)
    if args.all or args.property in (None, "all"):
        which = PROPERTIES
    else:
        which = (args.property,)
    report = build_report(G, args.input, fmt, which, labels=labels)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"{args.input}: n={G.n} m={G.m} bicliques={len(report['bicliques'])}")
        for prop in which:
            entry = report["verdicts"][VERDICT_KEYS[prop]]
            line = f"{prop:10s} {'yes' if entry['answer'] else 'no'}"
            detail = describe_witness(prop, entry["witness"], G, labels)
            print(f"{line}  {detail}".rstrip())
    holds = all(entry["answer"] for entry in report["verdicts"].values())
    return EXIT_OK if holds else EXIT_FAIL


def cmd_bicliques(args) -> int:
    G, _, labels = load_input(args.input, args.input_format)
    for b in enumerate_bicliques(G):
        a = " ".join(_name(v, labels) for v in b.side_a)
        c = " ".join(_name(v, labels) for v in b.side_b)
        print(f"{a} | {c}")
    return EXIT_OK


def cmd_lg(args) -> int:
    G, _, labels = load_input(args.input, args.input_format)
    L = biclique_line_graph(G)
    if args.format == "graph6":
        print(to_graph6(L.graph))
    elif args.format == "dot":
        sys.stdout.write(to_dot(L.graph, L.vertex_names(labels), name="LG"))
    else:
        sys.stdout.write(to_edge_list(L.graph))
    return EXIT_OK


def cmd_eb(args) -> int:
    G, _, _ = load_input(args.input, args.input_format)
    eb = eb_hypergraph(G)
    sys.stdout.write(hypergraph_to_text(G.m, eb.hyperedges))
    return EXIT_OK


def cmd_oracle(args) -> int:
    G, _, _ = load_input(args.input, args.input_format)
    eb = eb_hypergraph(G).hypergraph
    results = {
        "bicliques": enumerate_bicliques(G) == brute_bicliques(G),
        "helly": is_eb_helly(G).answer == is_helly(eb).answer == exhaustive_helly(eb),
        "hhelly": is_eb_hereditary_helly(G).answer == brute_hereditary_helly(G).answer,
    }
    for name, ok in results.items():
        print(f"{name:10s} {'agree' if ok else 'DISAGREE'}")
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def cmd_ensemble(args) -> int:
    try:
        config = EnsembleConfig(
            n_values=tuple(parse_range(args.n)),
            p_values=tuple(float(p) for p in args.p.split(",")),
            count=args.count,
            seed=args.seed,
            catalog_names=tuple(args.catalog),
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = run_ensemble(config)
    text = rows_to_csv(rows, timings=not args.no_timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.ok for r in rows) else EXIT_FAIL


def cmd_verify_witness(args) -> int:
    try:
        with (sys.stdin if args.report == "-" else open(args.report, encoding="utf-8")) as fh:
            report = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load report: {exc}") from None
    results = verify_report(report)
    for key, ok, detail in results:
        print(f"{key:18s} {'ok' if ok else 'FAIL'}  {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgebiclique", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, format_alias: bool = True):
        p.add_argument("input", help="file path, '-' for stdin, or catalog:NAME")
        flags = ["--input-format"] + (["--format"] if format_alias else [])
        p.add_argument(*flags, dest="input_format", choices=("edgelist", "graph6"), default=None,
                       help="input format (default: sniffed)")

    p = sub.add_parser("check", help="decide structural properties")
    p.add_argument("property", nargs="?", choices=PROPERTIES + ("all",))
    add_input(p)
    p.add_argument("--all", action="store_true", help="check every property")
    p.add_argument("--json", action="store_true", help="emit the full JSON report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bicliques", help="list maximal bicliques as 'A | B'")
    add_input(p)
    p.set_defaults(func=cmd_bicliques)

    p = sub.add_parser("lg", help="emit the biclique line graph")
    add_input(p, format_alias=False)
    p.add_argument("--format", choices=("edgelist", "graph6", "dot"), default="edgelist")
    p.set_defaults(func=cmd_lg)

    p = sub.add_parser("eb", help="emit the edge-biclique hypergraph")
    add_input(p)
    p.set_defaults(func=cmd_eb)

    p = sub.add_parser("oracle", help="cross-check fast paths against brute force on one graph")
    add_input(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ensemble", help="seeded oracle-equivalence sweep, CSV output")
    p.add_argument("--n", default="6..8", help="vertex count or range lo..hi")
    p.add_argument("--p", default="0.2,0.4,0.6", help="comma-separated edge probabilities")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--catalog", action="append", default=[], metavar="NAME", help="append a catalog graph row")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--no-timings", action="store_true", help="leave ms_per_stage empty")
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("verify-witness", help="re-verify the verdicts of a JSON report")
    p.add_argument("report", help="report file or '-'")
    p.set_defaults(func=cmd_verify_witness)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeCapError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
