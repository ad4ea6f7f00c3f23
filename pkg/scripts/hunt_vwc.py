"""Search very well-covered graphs for non-log-concave or non-unimodal polynomials.

Usage: python scripts/hunt_vwc.py --matched 20000 --stars 2000 --out hunt.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from indpoly.classifiers import is_very_well_covered
from indpoly.corpus import all_graphs_up_to, random_matched_graphs, random_star_graphs
from indpoly.verifiers import hunt


@dataclass
class HuntConfig:
    exhaustive_n: int = 6
    matched: int = 4000  # per even order
    matched_orders: tuple = (8, 10, 12)
    stars: int = 500
    star_nmax: int = 9
    seed: int = 0
    jobs: int = 1
    out: str = "hunt_vwc.json"


def vwc(graphs):
    return [G for G in graphs if G.n and is_very_well_covered(G)]


def run(cfg: HuntConfig) -> dict:
    corpora = {f"exhaustive<= {cfg.exhaustive_n}": vwc(all_graphs_up_to(cfg.exhaustive_n))}
    for n in cfg.matched_orders:
        corpora[f"matched n={n}"] = vwc(random_matched_graphs(cfg.matched, n, seed=cfg.seed + n))
    corpora[f"stars nmax={cfg.star_nmax}"] = list(random_star_graphs(cfg.stars, cfg.star_nmax, seed=cfg.seed))

    report = {"config": asdict(cfg), "corpora": {}}
    for name, graphs in corpora.items():
        start = time.perf_counter()
        entry = {"very_well_covered": len(graphs)}
        for prop in ("log-concave", "unimodal"):
            hits = list(hunt(graphs, "very-well-covered", prop, max_n=None, workers=cfg.jobs))
            entry[prop] = [r.to_json() for r in hits]
        entry["seconds"] = round(time.perf_counter() - start, 2)
        report["corpora"][name] = entry
        print(f"{name:>20}: {len(graphs):6d} graphs, "
              f"non-log-concave {len(entry['log-concave'])}, non-unimodal {len(entry['unimodal'])}")
    return report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive-n", type=int, default=HuntConfig.exhaustive_n)
    ap.add_argument("--matched", type=int, default=HuntConfig.matched)
    ap.add_argument("--matched-orders", type=int, nargs="+", default=list(HuntConfig.matched_orders))
    ap.add_argument("--stars", type=int, default=HuntConfig.stars)
    ap.add_argument("--star-nmax", type=int, default=HuntConfig.star_nmax)
    ap.add_argument("--seed", type=int, default=HuntConfig.seed)
    ap.add_argument("--jobs", type=int, default=HuntConfig.jobs)
    ap.add_argument("--out", default=HuntConfig.out)
    args = ap.parse_args()
    cfg = HuntConfig(**{**vars(args), "matched_orders": tuple(args.matched_orders)})
    report = run(cfg)
    with open(cfg.out, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
    print(f"report written to {cfg.out}")


if __name__ == "__main__":
    main()
