"""Exact stable-set counting and enumeration."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import Graph, bits, complement, component_masks
from .polyseq import CoeffSeq, seq_add, seq_mul, seq_shift

DEFAULT_MAX_N = 40
BRUTEFORCE_MAX_N = 25


class InstanceTooLarge(RuntimeError):
    """The graph exceeds the configured vertex-count ceiling."""


def _guard(G: Graph, max_n: int | None) -> None:
    if max_n is not None and G.n > max_n:
        raise InstanceTooLarge(f"graph has {G.n} vertices, ceiling is {max_n}")


def independence_polynomial(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> CoeffSeq:
    """Coefficients s_k = number of stable sets of size k.

    Uses I(G) = I(G - v) + x I(G - N[v]) on a maximum-degree vertex, after
    splitting into connected components. Cliques are a base case.
    """
    _guard(G, max_n)
    adj = G.adj
    memo: dict[int, tuple[int, ...]] = {}

    def connected(mask: int) -> tuple[int, ...]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        size = mask.bit_count()
        pivot, best = -1, -1
        clique = True
        for v in bits(mask):
            d = (adj[v] & mask).bit_count()
            if d != size - 1:
                clique = False
            if d > best:
                pivot, best = v, d
        if clique:
            result = (1, size)
        else:
            rest = mask & ~(1 << pivot)
            without = poly(rest)
            with_v = poly(rest & ~adj[pivot])
            result = tuple(seq_add(without, seq_shift(with_v)))
        memo[mask] = result
        return result

    def poly(mask: int) -> tuple[int, ...]:
        if not mask:
            return (1,)
        out: tuple[int, ...] = (1,)
        for comp in component_masks(adj, mask):
            out = tuple(seq_mul(out, connected(comp)))
        return out

    limit = sys.getrecursionlimit()
    if 4 * G.n + 100 > limit:
        sys.setrecursionlimit(4 * G.n + 100)
    try:
        return CoeffSeq(poly(G.full_mask))
    finally:
        sys.setrecursionlimit(limit)


def independence_polynomial_bruteforce(G: Graph) -> CoeffSeq:
    """Oracle: test every vertex subset for stability directly.

    Subsets of ``0..v`` are built from subsets of ``0..v-1`` by doubling; a
    subset containing ``v`` is stable iff its lower part is stable and misses
    every lower neighbor of ``v``.
    """
    if G.n > BRUTEFORCE_MAX_N:
        raise InstanceTooLarge(f"brute force limited to {BRUTEFORCE_MAX_N} vertices, got {G.n}")
    stable = np.ones(1, dtype=bool)
    size = np.zeros(1, dtype=np.int8)
    for v in range(G.n):
        lower = G.adj[v] & ((1 << v) - 1)
        idx = np.arange(1 << v, dtype=np.int64)
        with_v = stable & ((idx & lower) == 0)
        stable = np.concatenate([stable, with_v])
        size = np.concatenate([size, size + 1])
    counts = np.bincount(size[stable], minlength=G.n + 1)
    return CoeffSeq(int(c) for c in counts)


def stability_number(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> int:
    return independence_polynomial(G, max_n).degree


def clique_number(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> int:
    return stability_number(complement(G), max_n)


def stable_sets(G: Graph) -> Iterator[tuple[int, int]]:
    """Yield every stable set as ``(mask, closed_neighborhood_mask)``."""
    adj = G.adj

    def grow(S: int, closed: int, candidates: int) -> Iterator[tuple[int, int]]:
        yield S, closed
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            yield from grow(S | low, closed | low | adj[v], candidates & ~adj[v])

    yield from grow(0, 0, G.full_mask)


def maximal_stable_sets(G: Graph) -> Iterator[frozenset[int]]:
    """Every inclusion-maximal stable set, once each.

    Bron-Kerbosch with Tomita pivoting on the complement; candidates are
    expanded in ascending label order, so the output order is deterministic.
    """
    n = G.n
    full = G.full_mask
    # non-neighbors of v, excluding v itself
    co = [full & ~nb & ~(1 << v) for v, nb in enumerate(G.adj)]

    def expand(R: int, P: int, X: int) -> Iterator[int]:
        if not P and not X:
            yield R
            return
        pivot, best = -1, -1
        for u in bits(P | X):
            c = (P & co[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(P & ~co[pivot]):
            yield from expand(R | 1 << v, P & co[v], X & co[v])
            P &= ~(1 << v)
            X |= 1 << v

    if n == 0:
        yield frozenset()
        return
    for R in expand(0, full, 0):
        yield frozenset(bits(R))


@dataclass(frozen=True)
class OmegaProfile:
    """``omegas[j]`` holds the profile value at index ``j``.

    For a stable set size ``k`` the value at index ``alpha - k`` is the
    largest number of vertices left after deleting ``N[S]`` over stable ``S``
    with ``|S| = k``.
    """

    alpha: int
    omegas: tuple[int, ...]
    clique_number: int

    def at_size(self, k: int) -> int:
        """Profile value for stable sets of size ``k``."""
        return self.omegas[self.alpha - k]

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "omegas": list(self.omegas), "clique_number": self.clique_number}


def omega_by_size(G: Graph) -> list[int]:
    """``out[k]`` = max over stable S with |S| = k of ``n - |N[S]|``.

    Adding ``j`` vertices to S removes at least ``j`` more vertices, so a
    branch is abandoned once the incumbent at every reachable size already
    meets that ceiling.
    """
    n = G.n
    adj = G.adj
    alpha = independence_polynomial(G, max_n=None).degree
    best: list[int] = [-1] * (alpha + 1)

    def grow(size: int, closed: int, candidates: int) -> None:
        left = n - closed.bit_count()
        if left > best[size]:
            best[size] = left
        if all(best[s] >= left - (s - size) for s in range(size + 1, alpha + 1)):
            return
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            grow(size + 1, closed | low | adj[v], candidates & ~adj[v])

    grow(0, 0, G.full_mask)
    return best


def omega_profile(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> OmegaProfile:
    _guard(G, max_n)
    by_size = omega_by_size(G)
    alpha = len(by_size) - 1
    return OmegaProfile(
        alpha=alpha,
        omegas=tuple(reversed(by_size)),
        clique_number=clique_number(G, max_n),
    )
