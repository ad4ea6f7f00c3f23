"""Executable checks of the coefficient inequalities for independence
polynomials, the roller-coaster window, and a counterexample hunt harness.

Every ``verify_*`` function evaluates its conclusion even when the premise
fails; the premise is reported alongside, never used as a short-circuit.
The ``*_seq`` variants take a coefficient sequence directly so printed
polynomials of graphs we cannot rebuild can still be checked.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from . import classifiers
from .graph import Graph, is_bipartite, is_tree, pendant_edges_form_perfect_matching
from .independence import DEFAULT_MAX_N, OmegaProfile, _guard, independence_polynomial, omega_profile
from .polyseq import CoeffSeq, ShapeReport, first_logconcavity_violation, shape, valley
from .verdict import Part, Verdict, Violation, chain


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a / b for integers, b > 0."""
    if b <= 0:
        raise ValueError("denominator must be positive")
    return -(-a // b)


class Facts:
    """Lazily computed invariants of one graph, shared across verifiers."""

    def __init__(
        self,
        G: Graph,
        max_n: int | None = DEFAULT_MAX_N,
        perfect_max_n: int | None = classifiers.DEFAULT_PERFECT_MAX_N,
    ) -> None:
        _guard(G, max_n)
        self.G = G
        self.perfect_max_n = perfect_max_n

    @cached_property
    def coeffs(self) -> CoeffSeq:
        return independence_polynomial(self.G, max_n=None)

    @property
    def alpha(self) -> int:
        return self.coeffs.degree

    @cached_property
    def profile(self) -> OmegaProfile:
        return omega_profile(self.G, max_n=None)

    @cached_property
    def well_covered(self) -> classifiers.Result:
        return classifiers.is_well_covered(self.G, None)

    @cached_property
    def very_well_covered(self) -> classifiers.Result:
        if not self.well_covered:
            return classifiers.Result(False, self.well_covered.witness, "not well-covered")
        return classifiers.is_very_well_covered(self.G, None)

    @cached_property
    def quasi_regularizable(self) -> classifiers.Result:
        return classifiers.is_quasi_regularizable(self.G, None)

    @cached_property
    def perfect(self) -> classifiers.Result:
        return classifiers.is_perfect(self.G, self.perfect_max_n)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.G)

    @cached_property
    def tree(self) -> bool:
        return is_tree(self.G)

    @cached_property
    def shape(self) -> ShapeReport:
        return shape(self.coeffs)

    @cached_property
    def classes(self) -> classifiers.ClassReport:
        return classifiers.classify(self.G, None, self.perfect_max_n)


def _facts(G: Graph | Facts) -> Facts:
    return G if isinstance(G, Facts) else Facts(G)


def _nonempty(facts: Facts) -> None:
    if facts.G.n == 0:
        raise ValueError("verifiers need at least one vertex")


# -- shared coefficient predicates --------------------------------------------


def _tail_part(name: str, s: Sequence[int], t: int) -> Part:
    """s_t >= s_{t+1} >= ... >= s_alpha."""
    return chain(name, "s_k >= s_{k+1}", ((k, s[k], s[k + 1]) for k in range(t, len(s) - 1)), ">=")


def _head_part(name: str, s: Sequence[int], t: int) -> Part:
    """s_0 <= s_1 <= ... <= s_t."""
    return chain(name, "s_{k-1} <= s_k", ((k, s[k - 1], s[k]) for k in range(1, t + 1)))


def _unimodal_part(name: str, s: Sequence[int]) -> Part:
    j = valley(tuple(s))
    if j is None:
        return Part(name, True)
    return Part(name, False, Violation(name, j, s[j], s[j + 1], "s_k >= s_{k+1} past the first descent"))


def _log_concave_part(name: str, s: Sequence[int]) -> Part:
    i = first_logconcavity_violation(s)
    if i is None:
        return Part(name, True)
    return Part(name, False, Violation(name, i, s[i - 1] * s[i + 1], s[i] ** 2, "s_{k-1} * s_{k+1} <= s_k^2"))


def _prop2_lower(name: str, s: Sequence[int]) -> Part:
    a = len(s) - 1
    return chain(name, "(alpha-k) * s_k <= (k+1) * s_{k+1}", ((k, (a - k) * s[k], (k + 1) * s[k + 1]) for k in range(a)))


def _twice_upper(name: str, s: Sequence[int]) -> Part:
    a = len(s) - 1
    return chain(name, "(k+1) * s_{k+1} <= 2(alpha-k) * s_k", ((k, (k + 1) * s[k + 1], 2 * (a - k) * s[k]) for k in range(a)))


def _tail_index_two(alpha: int) -> int:
    return ceil_div(2 * alpha - 1, 3)


# -- well-covered inequalities ------------------------------------------------


def verify_prop2_seq(s: Sequence[int], premise: bool | None = None) -> Verdict:
    """(i) (alpha-k) s_k <= (k+1) s_{k+1}; (ii) s_{k-1} <= s_k for k <= (alpha+1)/2."""
    s = CoeffSeq(s)
    a = s.degree
    # k ranges over integers with k <= (alpha + 1) / 2 exactly
    top = (a + 1) // 2
    parts = (_prop2_lower("i", s), _head_part("ii", s, min(top, a)))
    return Verdict("prop2", premise, parts, data={"alpha": a, "head_through": min(top, a)})


def verify_prop2(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    v = verify_prop2_seq(f.coeffs, bool(f.well_covered))
    return _with_note(v, "premise: well-covered")


def verify_cor1_seq(s: Sequence[int], premise: bool | None = None) -> Verdict:
    """s_k <= s_{alpha-k} for 0 <= k <= alpha/2."""
    s = CoeffSeq(s)
    a = s.degree
    part = chain("symmetric", "s_k <= s_{alpha-k}", ((k, s[k], s[a - k]) for k in range(a // 2 + 1)))
    return Verdict("cor1", premise, (part, _telescoped(s)), data={"alpha": a})


def _telescoped(s: Sequence[int]) -> Part:
    """Replay the product argument behind the symmetric comparison.

    For each k whose chain of lower-ratio factors from k to alpha-k-1 all
    hold, multiply them: both sides carry the same factorial F and inner
    product P = s_{k+1} ... s_{alpha-k-1}, so the product must equal
    F*P*s_k <= F*P*s_{alpha-k}. Fails only if that algebra does not reproduce.
    """
    a = len(s) - 1
    for k in range(a // 2 + 1):
        span = range(k, a - k)
        if not span or not all((a - j) * s[j] <= (j + 1) * s[j + 1] for j in span):
            continue
        lhs = rhs = 1
        for j in span:
            lhs *= (a - j) * s[j]
            rhs *= (j + 1) * s[j + 1]
        factorial = inner = 1
        for j in span:
            factorial *= j + 1
        for j in range(k + 1, a - k):
            inner *= s[j]
        if lhs != factorial * inner * s[k] or rhs != factorial * inner * s[a - k] or lhs > rhs:
            return Part("telescoped", False, Violation("telescoped", k, lhs, rhs, "product of lower-ratio factors"))
    return Part("telescoped", True)


def verify_cor1(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    return _with_note(verify_cor1_seq(f.coeffs, bool(f.well_covered)), "premise: well-covered")


# -- omega-profile bounds -----------------------------------------------------


def verify_lemma1_seq(s: Sequence[int], profile: OmegaProfile) -> Verdict:
    s = CoeffSeq(s)
    a = s.degree
    if profile.alpha != a:
        raise ValueError("profile and sequence disagree on alpha")
    bound = chain(
        "bound",
        "(k+1) * s_{k+1} <= omega_{alpha-k} * s_k",
        ((k, (k + 1) * s[k + 1], profile.at_size(k) * s[k]) for k in range(a)),
    )
    parts = [bound]
    if a >= 1:
        w1 = profile.omegas[1]
        parts.append(chain("particular", "alpha * s_alpha <= omega_1 * s_{alpha-1}", [(a - 1, a * s[a], w1 * s[a - 1])]))
        parts.append(
            chain("clique", "omega_1 * s_{alpha-1} <= omega(G) * s_{alpha-1}", [(a - 1, w1 * s[a - 1], profile.clique_number * s[a - 1])])
        )
    return Verdict("lemma1", True, tuple(parts), data=profile.to_json())


def verify_lemma1(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    v = verify_lemma1_seq(f.coeffs, f.profile)
    if not v.conclusion_holds:
        return _with_note(v, "unconditional bound failed: probable implementation defect")
    return v


def verify_prop1_seq(s: Sequence[int], premise: bool | None = None, profile: OmegaProfile | None = None) -> Verdict:
    """(i) omega_{alpha-k} <= 2(alpha-k); (ii) (k+1) s_{k+1} <= 2(alpha-k) s_k; (iii) tail from ceil((2 alpha-1)/3)."""
    s = CoeffSeq(s)
    a = s.degree
    if profile is None:
        part_i = Part("i", None)
    else:
        part_i = chain("i", "omega_{alpha-k} <= 2(alpha-k)", ((k, profile.at_size(k), 2 * (a - k)) for k in range(a + 1)))
    t = _tail_index_two(a) if a >= 1 else 0
    parts = (part_i, _twice_upper("ii", s), _tail_part("iii", s, t))
    return Verdict("prop1", premise, parts, data={"alpha": a, "tail_from": t})


def verify_prop1(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    order_ok = f.G.n == 2 * f.alpha
    premise = bool(f.quasi_regularizable) and order_ok
    v = verify_prop1_seq(f.coeffs, premise, f.profile)
    note = "premise: quasi-regularizable and n = 2 alpha"
    if f.G.n > 2 * f.alpha:
        note += f"; n = {f.G.n} > 2 alpha = {2 * f.alpha}, so (i) and (ii) cannot hold at k = 0"
    return _with_note(v, note)


# -- very well-covered bounds --------------------------------------------------


def verify_main_theorem_seq(s: Sequence[int], premise: bool | None = None) -> Verdict:
    s = CoeffSeq(s)
    a = s.degree
    lower = _prop2_lower("i", s)
    upper = _twice_upper("i", s)
    part_i = lower if lower.holds is False else upper
    parts = [
        part_i,
        _head_part("ii.head", s, min(ceil_div(a, 2), a)),
        _tail_part("ii.tail", s, _tail_index_two(a) if a >= 1 else 0),
    ]
    if a >= 2:
        parts.append(chain("iii", "s_{alpha-2} * s_alpha <= s_{alpha-1}^2", [(a - 1, s[a - 2] * s[a], s[a - 1] ** 2)]))
    else:
        parts.append(Part("iii", None))
    parts.append(_unimodal_part("iv", s) if a <= 9 else Part("iv", None))
    parts.append(_log_concave_part("v", s) if a <= 5 else Part("v", None))
    return Verdict("main", premise, tuple(parts), data={"alpha": a, "window": roller_coaster_window(a).to_json() if a else None})


def verify_main_theorem(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    premise = f.G.n >= 2 and bool(f.very_well_covered)
    return _with_note(verify_main_theorem_seq(f.coeffs, premise), "premise: very well-covered, n >= 2")


# -- perfect and bipartite tails ----------------------------------------------


def verify_prop3_seq(s: Sequence[int], clique: int, premise: bool | None = None) -> Verdict:
    s = CoeffSeq(s)
    a = s.degree
    t = ceil_div(clique * a - 1, clique + 1)
    nontrivial = a >= clique
    note = f"tail from {t}; range {'nonempty' if nontrivial else 'empty'} (alpha {'>=' if nontrivial else '<'} omega)"
    return Verdict(
        "prop3",
        premise,
        (_tail_part("tail", s, t),),
        notes=note,
        data={"alpha": a, "omega": clique, "tail_from": t, "nontrivial": nontrivial},
    )


def verify_prop3(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    perf = f.perfect
    v = verify_prop3_seq(f.coeffs, f.profile.clique_number, perf.value)
    if perf.skipped:
        return _with_note(v, f"premise unknown: {perf.note}")
    return _with_note(v, "premise: perfect")


def verify_cor2_cor3_seq(s: Sequence[int], premise: bool | None = None) -> Verdict:
    s = CoeffSeq(s)
    a = s.degree
    t = _tail_index_two(a) if a >= 1 else 0
    return Verdict("cor2_cor3", premise, (_tail_part("tail", s, t),), data={"alpha": a, "tail_from": t})


def verify_cor2_cor3(G: Graph | Facts) -> Verdict:
    f = _facts(G)
    _nonempty(f)
    v = verify_cor2_cor3_seq(f.coeffs, f.bipartite)
    return _with_note(v, f"premise: bipartite; tree={f.tree}")


def finbow_check(G: Graph | Facts) -> Verdict:
    """Girth >= 6 characterization: well-covered iff pendant edges form a perfect matching."""
    f = _facts(G)
    ok, reason = classifiers.finbow_applicable(f.G)
    wc = bool(f.well_covered)
    pm = pendant_edges_form_perfect_matching(f.G)
    if wc == pm:
        part = Part("agree", True)
    else:
        part = Part("agree", False, Violation("agree", 0, int(wc), int(pm), "well_covered == pendant_perfect_matching"))
    return Verdict(
        "finbow",
        ok,
        (part,),
        notes=reason or "premise: connected, girth >= 6, not K1 or C7",
        data={"well_covered": wc, "pendant_perfect_matching": pm},
    )


def _with_note(v: Verdict, note: str) -> Verdict:
    notes = f"{v.notes}; {note}" if v.notes else note
    return Verdict(v.statement_id, v.premise_holds, v.parts, notes, v.data)


CHECKS: dict[str, Callable[[Graph | Facts], Verdict]] = {
    "lemma1": verify_lemma1,
    "prop1": verify_prop1,
    "prop2": verify_prop2,
    "cor1": verify_cor1,
    "main": verify_main_theorem,
    "prop3": verify_prop3,
    "cor2_cor3": verify_cor2_cor3,
    "finbow": finbow_check,
}
CHECK_ALIASES = {"theorem": "main", "cor2": "cor2_cor3", "cor3": "cor2_cor3"}


def resolve_checks(text: str) -> list[str]:
    if text.strip() == "all":
        return list(CHECKS)
    names = []
    for raw in text.split(","):
        name = CHECK_ALIASES.get(raw.strip(), raw.strip())
        if name not in CHECKS:
            raise KeyError(f"unknown check {raw.strip()!r}; choose from {', '.join(CHECKS)}")
        if name not in names:
            names.append(name)
    return names


def verify_all(G: Graph | Facts, checks: Iterable[str] = CHECKS) -> list[Verdict]:
    f = _facts(G)
    return [CHECKS[name](f) for name in checks]


# -- roller-coaster window ----------------------------------------------------


@dataclass(frozen=True)
class WindowReport:
    alpha: int
    lower: int
    upper: int

    @property
    def window(self) -> range:
        return range(self.lower, self.upper + 1)

    @property
    def width(self) -> int:
        return self.upper - self.lower

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "lower": self.lower, "upper": self.upper, "window": list(self.window)}


def roller_coaster_window(alpha: int) -> WindowReport:
    """Indices ceil(alpha/2) .. ceil((2 alpha - 1)/3) left unconstrained for very well-covered graphs."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    return WindowReport(alpha, ceil_div(alpha, 2), ceil_div(2 * alpha - 1, 3))


# -- hunt ---------------------------------------------------------------------


PREDICATES: dict[str, Callable[[Facts], bool]] = {
    "any": lambda f: True,
    "well-covered": lambda f: bool(f.well_covered),
    "very-well-covered": lambda f: bool(f.very_well_covered),
    "quasi-regularizable": lambda f: bool(f.quasi_regularizable),
    "perfect": lambda f: f.perfect.value is True,
    "bipartite": lambda f: f.bipartite,
    "tree": lambda f: f.tree,
    "well-covered-tree": lambda f: f.tree and bool(f.well_covered),
}

PROPERTIES: dict[str, Callable[[Facts], bool]] = {
    "unimodal": lambda f: f.shape.unimodal,
    "log-concave": lambda f: f.shape.log_concave,
}


@dataclass(frozen=True)
class HuntRecord:
    index: int
    graph: Graph
    coeffs: CoeffSeq
    classes: classifiers.ClassReport
    shape: ShapeReport

    def to_json(self) -> dict:
        from .formats import write_graph6

        return {
            "index": self.index,
            "graph6": write_graph6(self.graph),
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "coeffs": self.coeffs.to_json(),
            "classes": self.classes.to_json(),
            "shape": self.shape.to_json(),
        }


def _check_names(predicate: str, prop: str) -> None:
    if predicate not in PREDICATES:
        raise KeyError(f"unknown predicate {predicate!r}; choose from {', '.join(PREDICATES)}")
    if prop not in PROPERTIES:
        raise KeyError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")


def _probe(args: tuple[int, Graph, str, str, int | None, int | None]) -> HuntRecord | None:
    index, G, predicate, prop, max_n, perfect_max_n = args
    if G.n == 0:
        return None
    f = Facts(G, max_n, perfect_max_n)
    if PREDICATES[predicate](f) and not PROPERTIES[prop](f):
        return HuntRecord(index, G, f.coeffs, f.classes, f.shape)
    return None


def hunt(
    corpus: Iterable[Graph],
    predicate: str,
    prop: str,
    max_n: int | None = DEFAULT_MAX_N,
    perfect_max_n: int | None = classifiers.DEFAULT_PERFECT_MAX_N,
    workers: int = 1,
) -> Iterator[HuntRecord]:
    """Yield corpus graphs that satisfy ``predicate`` but fail ``prop``, in corpus order.

    Empty graphs are skipped. With ``workers > 1`` graphs are probed in
    worker processes; ``Executor.map`` keeps the output in input order.
    """
    _check_names(predicate, prop)
    jobs = ((i, G, predicate, prop, max_n, perfect_max_n) for i, G in enumerate(corpus))
    if workers <= 1:
        results: Iterable[HuntRecord | None] = map(_probe, jobs)
        yield from (r for r in results if r is not None)
        return
    with ProcessPoolExecutor(workers) as pool:
        for r in pool.map(_probe, jobs, chunksize=64):
            if r is not None:
                yield r

