"""Recognizers for well-covered, very well-covered, quasi-regularizable and
perfect graphs. Negative answers always carry a witness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import (
    Graph,
    GraphError,
    bits,
    component_masks,
    girth,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
    isolated_vertices,
)
from .independence import (
    DEFAULT_MAX_N,
    _guard,
    independence_polynomial,
    maximal_stable_sets,
    stable_sets,
)

DEFAULT_PERFECT_MAX_N = 14


@dataclass(frozen=True)
class Result:
    """A yes/no answer with optional evidence; truthy iff ``value``."""

    value: bool | None
    witness: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return bool(self.value)

    @property
    def skipped(self) -> bool:
        return self.value is None


def _nonempty(G: Graph) -> None:
    if G.n == 0:
        raise GraphError("classifiers are undefined on the empty graph")


def is_well_covered(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> Result:
    """All maximal stable sets have the same size.

    Witness on failure: ``(smaller, maximum)`` maximal stable sets.
    """
    _nonempty(G)
    _guard(G, max_n)
    alpha = independence_polynomial(G, max_n=None).degree
    largest = None
    smaller = None
    for S in maximal_stable_sets(G):
        if len(S) == alpha and largest is None:
            largest = S
        elif len(S) < alpha and smaller is None:
            smaller = S
        if smaller is not None and largest is not None:
            return Result(False, (tuple(sorted(smaller)), tuple(sorted(largest))))
    return Result(True)


def is_very_well_covered(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> Result:
    _nonempty(G)
    _guard(G, max_n)
    isolated = isolated_vertices(G)
    if isolated:
        return Result(False, isolated[0], "isolated vertex")
    alpha = independence_polynomial(G, max_n=None).degree
    if G.n != 2 * alpha:
        return Result(False, alpha, f"order {G.n} != 2 * alpha = {2 * alpha}")
    wc = is_well_covered(G, max_n=None)
    if not wc:
        return Result(False, wc.witness, "not well-covered")
    return Result(True)


def is_quasi_regularizable(G: Graph, max_n: int | None = DEFAULT_MAX_N) -> Result:
    """|S| <= |N(S)| for every stable set S (Berge's criterion).

    Witness on failure: the stable set maximizing ``|S| - |N(S)|`` (first
    found on ties), e.g. all leaves of a star.
    """
    _nonempty(G)
    _guard(G, max_n)
    worst, deficit = 0, 0
    for S, closed in stable_sets(G):
        excess = S.bit_count() - (closed & ~S).bit_count()
        if excess > deficit:
            worst, deficit = S, excess
    if deficit:
        return Result(False, tuple(bits(worst)), f"|S| - |N(S)| = {deficit}")
    return Result(True)


def _alpha_table(adj: list[int], n: int) -> list[int]:
    """Stability number of every induced subgraph, indexed by vertex mask."""
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        table[mask] = max(table[rest], 1 + table[rest & ~adj[v]])
    return table


def _perfect_component(G: Graph) -> int | None:
    """Return a subset violating |V(H)| <= alpha(H) * omega(H), else None."""
    n = G.n
    full = G.full_mask
    co = [full & ~nb & ~(1 << v) for v, nb in enumerate(G.adj)]
    alpha = _alpha_table(list(G.adj), n)
    omega = _alpha_table(co, n)
    for mask in range(1, 1 << n):
        if mask.bit_count() > alpha[mask] * omega[mask]:
            return mask
    return None


def is_perfect(G: Graph, perfect_max_n: int | None = DEFAULT_PERFECT_MAX_N) -> Result:
    """Lovász's condition |V(H)| <= alpha(H) * omega(H) over all induced H.

    The condition is checked per connected component: a violating subset of
    a component violates it for G, and if every component satisfies it then
    so does every union of induced subgraphs of components. The ceiling
    applies to the largest component; beyond it the answer is skipped
    (``value is None``), never guessed.
    """
    _nonempty(G)
    comps = component_masks(G.adj, G.full_mask)
    largest = max(c.bit_count() for c in comps)
    if perfect_max_n is not None and largest > perfect_max_n:
        return Result(None, note=f"skipped: component of order {largest} exceeds {perfect_max_n}")
    for comp in comps:
        members = list(bits(comp))
        hit = _perfect_component(induced_subgraph(G, members))
        if hit is not None:
            return Result(False, tuple(members[i] for i in bits(hit)))
    return Result(True)


def finbow_applicable(G: Graph) -> tuple[bool, str]:
    """Preconditions of the girth->=6 well-coveredness characterization."""
    if G.n == 0 or not is_connected(G):
        return False, "graph is not connected"
    if G.n == 1:
        return False, "graph is K1"
    if girth(G) < 6:
        return False, f"girth {girth(G)} < 6"
    if G.n == 7 and G.m == 7 and all(nb.bit_count() == 2 for nb in G.adj):
        return False, "graph is C7"
    return True, ""


@dataclass
class ClassReport:
    well_covered: bool
    very_well_covered: bool
    quasi_regularizable: bool
    perfect: bool | None
    bipartite: bool
    tree: bool
    girth: int | float
    witness: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "well_covered": self.well_covered,
            "very_well_covered": self.very_well_covered,
            "quasi_regularizable": self.quasi_regularizable,
            "perfect": self.perfect,
            "bipartite": self.bipartite,
            "tree": self.tree,
            "girth": None if self.girth == float("inf") else self.girth,
            "witness": {k: _jsonable(v) for k, v in sorted(self.witness.items())},
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (tuple, list, frozenset, set)):
        return [_jsonable(v) for v in value]
    return value


def classify(
    G: Graph,
    max_n: int | None = DEFAULT_MAX_N,
    perfect_max_n: int | None = DEFAULT_PERFECT_MAX_N,
) -> ClassReport:
    _nonempty(G)
    _guard(G, max_n)
    wc = is_well_covered(G, None)
    vwc = is_very_well_covered(G, None) if wc else Result(False, note="not well-covered")
    qr = is_quasi_regularizable(G, None)
    perf = is_perfect(G, perfect_max_n)
    witness: dict[str, Any] = {}
    if not wc:
        witness["well_covered"] = wc.witness
    if not qr:
        witness["quasi_regularizable"] = qr.witness
    if perf.value is False:
        witness["perfect"] = perf.witness
    elif perf.skipped:
        witness["perfect"] = perf.note
    return ClassReport(
        well_covered=bool(wc),
        very_well_covered=bool(vwc),
        quasi_regularizable=bool(qr),
        perfect=perf.value,
        bipartite=is_bipartite(G),
        tree=is_tree(G),
        girth=girth(G),
        witness=witness,
    )

