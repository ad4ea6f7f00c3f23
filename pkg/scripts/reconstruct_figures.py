"""Recover graphs that are only available as drawings.

The 12-vertex very well-covered drawing has 13 visible segments, but its
caption polynomial needs one more edge. This lists every single-edge
completion of the drawn graph that reproduces the caption polynomial and
stays very well-covered.
"""

import argparse
from itertools import combinations

from indpoly.classifiers import is_very_well_covered
from indpoly.fixtures import POLYNOMIALS
from indpoly.graph import add_edge, delete_edge
from indpoly.independence import independence_polynomial

# label pair of the completing edge chosen in the catalog
CHOSEN = (8, 9)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--name", default="vwc-12", help="catalog fixture to complete")
    args = ap.parse_args()
    fx = next(f for f in POLYNOMIALS if f.name == args.name)
    G = fx.build()
    drawn = delete_edge(G, *CHOSEN) if args.name == "vwc-12" else G
    print(f"drawn: {drawn.m} edges, polynomial {list(independence_polynomial(drawn))}")
    print(f"target: {list(fx.expected)}")
    hits = []
    for u, v in combinations(range(drawn.n), 2):
        if drawn.has_edge(u, v):
            continue
        H = add_edge(drawn, u, v)
        if tuple(independence_polynomial(H)) == fx.expected:
            hits.append((u, v, bool(is_very_well_covered(H))))
    for u, v, vwc in hits:
        mark = " <- catalog" if (u, v) == CHOSEN else ""
        print(f"  add ({u}, {v}): very well-covered={vwc}{mark}")
    print(f"{len(hits)} completions")


if __name__ == "__main__":
    main()
