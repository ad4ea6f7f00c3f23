"""Immutable simple graphs on dense integer labels.

Adjacency is stored as one integer bitmask per vertex: bit ``u`` of
``adj[v]`` is set iff ``uv`` is an edge. Every edit returns a new graph and
relabels the surviving vertices in increasing order.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Iterator, Sequence

VertexSet = AbstractSet[int]

INFINITY = math.inf


class GraphError(ValueError):
    """Raised on malformed graph input or an invalid edit."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def open_neighborhood(self, S: VertexSet) -> frozenset[int]:
        """N(S): vertices with at least one neighbor in ``S``."""
        mask = 0
        for v in self._checked(S):
            mask |= self.adj[v]
        return frozenset(bits(mask))

    def closed_neighborhood(self, S: VertexSet) -> frozenset[int]:
        return self.open_neighborhood(S) | frozenset(S)

    def is_stable(self, S: VertexSet) -> bool:
        mask = to_mask(self._checked(S))
        return all(not self.adj[v] & mask for v in S)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def _checked(self, S: Iterable[int]) -> list[int]:
        S = list(S)
        for v in S:
            self._check_vertex(v)
        return S

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a simple graph on ``0..n-1``; duplicate pairs are collapsed."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {tuple(e)!r} is not a pair")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _relabel(G: Graph, keep: int) -> Graph:
    order = list(bits(keep))
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        adj.append(to_mask(index[u] for u in bits(G.adj[v] & keep)))
    return Graph(len(order), tuple(adj))


def induced_subgraph(G: Graph, X: VertexSet) -> Graph:
    """G[X], relabelled order-preservingly to ``0..|X|-1``."""
    return _relabel(G, to_mask(G._checked(X)))


def delete_closed_neighborhood(G: Graph, S: VertexSet) -> Graph:
    """G - N[S]."""
    closed = to_mask(G.closed_neighborhood(S))
    return _relabel(G, G.full_mask & ~closed)


def add_edge(G: Graph, u: int, v: int) -> Graph:
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v:
        raise GraphError(f"loop edge ({u}, {v})")
    adj = list(G.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def delete_vertex(G: Graph, v: int) -> Graph:
    G._check_vertex(v)
    return _relabel(G, G.full_mask & ~(1 << v))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(G.adj)))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """G1 ⊔ G2; the vertices of G2 are shifted by ``G1.n``."""
    shift = G1.n
    return Graph(G1.n + G2.n, G1.adj + tuple(nb << shift for nb in G2.adj))


def zykov_sum(G1: Graph, G2: Graph) -> Graph:
    """G1 + G2: the disjoint union plus every edge between the two sides."""
    shift = G1.n
    left = G1.full_mask
    right = G2.full_mask << shift
    return Graph(
        G1.n + G2.n,
        tuple(nb | right for nb in G1.adj) + tuple((nb << shift) | left for nb in G2.adj),
    )


def star_graph(G: Graph) -> Graph:
    """G*: attach one new pendant vertex ``v + n`` to every vertex ``v``."""
    if G.n == 0:
        raise GraphError("star_graph needs at least one vertex")
    n = G.n
    adj = [nb | 1 << (v + n) for v, nb in enumerate(G.adj)]
    adj += [1 << v for v in range(n)]
    return Graph(2 * n, tuple(adj))


# -- standard families -------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return zykov_sum(empty_graph(a), empty_graph(b))


# -- structural predicates ---------------------------------------------------


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as bitmasks."""
    comps = []
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def connected_components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(G.adj, G.full_mask)]


def is_connected(G: Graph) -> bool:
    return len(component_masks(G.adj, G.full_mask)) <= 1


def girth(G: Graph) -> int | float:
    """Length of a shortest cycle; ``INFINITY`` for forests.

    BFS from every vertex; a non-tree edge ``uw`` closes a cycle of length
    at most ``dist[u] + dist[w] + 1`` and the minimum over all roots is exact.
    """
    best = INFINITY
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(G.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(G: Graph) -> bool:
    color: dict[int, int] = {}
    for root in range(G.n):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(G.adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def isolated_vertices(G: Graph) -> list[int]:
    return [v for v in range(G.n) if not G.adj[v]]


def pendant_edges(G: Graph) -> list[tuple[int, int]]:
    """Edges with at least one endpoint of degree 1."""
    return [(u, v) for u, v in G.edges() if G.adj[u].bit_count() == 1 or G.adj[v].bit_count() == 1]


def pendant_edges_form_perfect_matching(G: Graph) -> bool:
    covered = 0
    for u, v in pendant_edges(G):
        pair = 1 << u | 1 << v
        if covered & pair:
            return False
        covered |= pair
    return G.n >= 1 and covered == G.full_mask
