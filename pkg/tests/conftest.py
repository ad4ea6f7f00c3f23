import os
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from indpoly.graph import Graph, make_graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


def from_nx(H: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return make_graph(len(index), [(index[u], index[v]) for u, v in H.edges()])


@pytest.fixture(scope="session")
def atlas():
    """All 1253 graphs on at most 7 vertices, one per isomorphism class."""
    return [from_nx(H) for H in nx.graph_atlas_g()]


# -- brute-force oracles, independent of the package's algorithms -------------


def stable_subsets(G: Graph):
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if all(not G.has_edge(u, v) for u, v in combinations(S, 2)):
                yield S


def brute_alpha(G: Graph) -> int:
    return max(len(S) for S in stable_subsets(G))


def brute_clique(G: Graph) -> int:
    best = 0
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if all(G.has_edge(u, v) for u, v in combinations(S, 2)):
                best = k
    return best


def brute_maximal_stable(G: Graph) -> set:
    sets = [set(S) for S in stable_subsets(G)]
    out = set()
    for S in sets:
        if all(any(G.has_edge(v, u) for u in S) for v in range(G.n) if v not in S):
            out.add(frozenset(S))
    return out


def brute_closed(G: Graph, S) -> set:
    closed = set(S)
    for v in S:
        closed |= {u for u in range(G.n) if G.has_edge(u, v)}
    return closed


def brute_omega_by_size(G: Graph) -> list:
    best = {}
    for S in stable_subsets(G):
        val = G.n - len(brute_closed(G, S))
        best[len(S)] = max(best.get(len(S), -1), val)
    return [best[k] for k in range(max(best) + 1)]


def brute_girth(G: Graph):
    """Shortest cycle by enumerating simple paths that close up."""
    best = float("inf")

    def walk(start, path, seen):
        nonlocal best
        last = path[-1]
        for w in range(G.n):
            if not G.has_edge(last, w):
                continue
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w not in seen and w > start and len(path) + 1 < best:
                walk(start, path + [w], seen | {w})

    for s in range(G.n):
        walk(s, [s], {s})
    return best


def brute_chromatic(G: Graph) -> int:
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        colors = [0] * G.n

        def place(v):
            if v == G.n:
                return True
            for c in range(k):
                if all(not (G.has_edge(u, v) and colors[u] == c) for u in range(v)):
                    colors[v] = c
                    if place(v + 1):
                        return True
            return False

        if place(0):
            return k
    return G.n


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
