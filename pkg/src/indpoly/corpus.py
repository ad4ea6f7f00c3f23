"""Graph corpora for sweeps: exhaustive labeled graphs and random samples."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, make_graph, star_graph


def pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_code(n: int, code: int) -> Graph:
    """Bit i of ``code`` selects the i-th pair of ``combinations(range(n), 2)``."""
    return make_graph(n, [p for i, p in enumerate(pairs(n)) if code >> i & 1])


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices (2^(n choose 2) of them)."""
    ps = pairs(n)
    adj_bits = [(1 << u, 1 << v) for u, v in ps]
    for code in range(1 << len(ps)):
        adj = [0] * n
        i = 0
        c = code
        while c:
            if c & 1:
                bu, bv = adj_bits[i]
                u, v = ps[i]
                adj[u] |= bv
                adj[v] |= bu
            c >>= 1
            i += 1
        yield Graph(n, tuple(adj))


def all_graphs_up_to(n: int) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from all_graphs(k)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return make_graph(n, [e for e in pairs(n) if rng.random() < p])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    if n <= 2:
        return make_graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return make_graph(n, edges)


def random_graphs(count: int, n_max: int, seed: int = 0, n_min: int = 1) -> Iterator[Graph]:
    """Random graphs with order uniform in ``n_min..n_max`` and density uniform in (0, 1)."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng.randint(n_min, n_max), rng.random(), rng)


def random_star_graphs(count: int, n_max: int, seed: int = 0) -> Iterator[Graph]:
    """G* for random G; always very well-covered with alpha = |V(G)|."""
    for G in random_graphs(count, n_max, seed):
        yield star_graph(G)


def random_matched_graphs(count: int, n: int, seed: int = 0, p_max: float = 0.5) -> Iterator[Graph]:
    """Random graphs on an even ``n`` that contain a random perfect matching.

    Every very well-covered graph without isolated vertices has a perfect
    matching, so this corpus yields them far more often than plain G(n, p).
    """
    if n % 2:
        raise ValueError("n must be even")
    rng = random.Random(seed)
    for _ in range(count):
        perm = list(range(n))
        rng.shuffle(perm)
        edges = {(perm[2 * i], perm[2 * i + 1]) for i in range(n // 2)}
        p = rng.random() * p_max
        edges.update(e for e in pairs(n) if rng.random() < p)
        yield make_graph(n, edges)
