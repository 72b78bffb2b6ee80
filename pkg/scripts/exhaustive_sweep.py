"""Exhaustive sweep over all labeled graphs up to a vertex count.

For each n: how many graphs have conformal / Helly / hereditary-Helly EB(G),
how many L_G avoid claw, diamond and C4, and (up to --brute-max) whether the
hereditary-Helly characterization matches the brute-force definition.

    python scripts/exhaustive_sweep.py --max-n 6 --brute-max 5
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from edgebiclique.blg import biclique_line_graph
from edgebiclique.catalog import catalog
from edgebiclique.graph import is_isomorphic
from edgebiclique.oracle import all_labeled_graphs, brute_hereditary_helly
from edgebiclique.recognition import is_eb_conformal, is_eb_helly, is_eb_hereditary_helly, is_hereditary_blg


@dataclass
class Config:
    max_n: int = 6
    brute_max: int = 5


def sweep(cfg: Config) -> bool:
    forbidden = [catalog(name) for name in ("claw", "diamond", "C4")]
    ok = True
    print(f"{'n':>2} {'graphs':>7} {'conformal':>9} {'helly':>6} {'hhelly':>6} {'hblg L_G':>8} {'forbidden L_G':>13} {'brute':>6} {'secs':>6}")
    for n in range(cfg.max_n + 1):
        start = time.perf_counter()
        total = conformal = helly = hhelly = hblg = bad_lg = mismatches = 0
        for G in all_labeled_graphs(n):
            total += 1
            c = is_eb_conformal(G).answer
            h = is_eb_helly(G).answer
            hh = is_eb_hereditary_helly(G).answer
            L = biclique_line_graph(G).graph
            conformal += c
            helly += h
            hhelly += hh
            hblg += is_hereditary_blg(L).answer
            if L.n == 4:
                bad_lg += any(is_isomorphic(L, F) is not None for F in forbidden)
            if n <= cfg.brute_max:
                mismatches += hh != brute_hereditary_helly(G).answer
        brute = str(mismatches) if n <= cfg.brute_max else "-"
        ok &= bad_lg == 0 and mismatches == 0
        secs = time.perf_counter() - start
        print(f"{n:>2} {total:>7} {conformal:>9} {helly:>6} {hhelly:>6} {hblg:>8} {bad_lg:>13} {brute:>6} {secs:>6.1f}")
    return ok


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    parser.add_argument("--brute-max", type=int, default=Config.brute_max)
    args = parser.parse_args()
    raise SystemExit(0 if sweep(Config(args.max_n, args.brute_max)) else 1)
