"""Run every verifier over a corpus and tabulate premises, passes and failures.

Failures with the premise false are expected and show how sharp each
hypothesis is; any failure with the premise true is a bug.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from indpoly.corpus import all_graphs_up_to, random_graphs
from indpoly.formats import write_graph6
from indpoly.verifiers import CHECKS, Facts, verify_all


@dataclass
class SweepConfig:
    exhaustive_n: int = 5
    random_count: int = 2000
    random_nmax: int = 10
    seed: int = 1
    perfect_max_n: int = 14


def sweep(cfg: SweepConfig):
    corpus = list(all_graphs_up_to(cfg.exhaustive_n))
    corpus += list(random_graphs(cfg.random_count, cfg.random_nmax, seed=cfg.seed))
    table = {name: Counter() for name in CHECKS}
    refuted = []
    for G in corpus:
        for v in verify_all(Facts(G, None, cfg.perfect_max_n)):
            row = table[v.statement_id]
            premise = {True: "premise", False: "outside", None: "unknown"}[v.premise_holds]
            row[f"{premise}/{'holds' if v.conclusion_holds else 'fails'}"] += 1
            if v.refutes:
                refuted.append((write_graph6(G), v.statement_id))
    return len(corpus), table, refuted


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive-n", type=int, default=SweepConfig.exhaustive_n)
    ap.add_argument("--random-count", type=int, default=SweepConfig.random_count)
    ap.add_argument("--random-nmax", type=int, default=SweepConfig.random_nmax)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--perfect-max-n", type=int, default=SweepConfig.perfect_max_n)
    cfg = SweepConfig(**vars(ap.parse_args()))
    total, table, refuted = sweep(cfg)
    cols = ["premise/holds", "premise/fails", "outside/holds", "outside/fails", "unknown/holds", "unknown/fails"]
    print(f"{total} graphs")
    print(f"{'check':>10} " + " ".join(f"{c:>14}" for c in cols))
    for name, row in table.items():
        print(f"{name:>10} " + " ".join(f"{row[c]:>14}" for c in cols))
    if refuted:
        print("REFUTED:", refuted[:20])
        raise SystemExit(1)


if __name__ == "__main__":
    main()
