"""Catalog of worked examples with known polynomials and verdicts.

Polynomial fixtures are built from DSL expressions and compared by exact
integer equality. Graphs that only exist as drawings are rebuilt from their
picture coordinates and flagged ``reconstructed``; they are skipped unless
explicitly requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import classifiers
from .dsl import build
from .graph import Graph, make_graph
from .independence import clique_number, independence_polynomial, omega_profile, stability_number
from .polyseq import shape
from .verifiers import (
    roller_coaster_window,
    verify_cor1,
    verify_main_theorem_seq,
    verify_prop1,
    verify_prop1_seq,
    verify_prop2,
    verify_prop2_seq,
    verify_prop3,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    build: Callable[[], Graph]
    expected: tuple[int, ...]
    label: str
    reconstructed: bool = False


@dataclass(frozen=True)
class CheckFixture:
    name: str
    run: Callable[[], tuple[bool, str]]
    reconstructed: bool = False


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _expr(text: str) -> Callable[[], Graph]:
    return lambda: build(text)


def _drawn(points: list[tuple[float, float]], segments: list[tuple[tuple[float, float], tuple[float, float]]]) -> Callable[[], Graph]:
    index = {p: i for i, p in enumerate(points)}
    return lambda: make_graph(len(points), [(index[a], index[b]) for a, b in segments])


# Drawings, vertex coordinates as placed in the pictures.
_NWC_A = [(3, 0), (4, 0), (5, 0), (6, 0), (3.5, 1), (5.5, 1)]
_NWC_A_SEGS = [((3, 0), (4, 0)), ((4, 0), (5, 0)), ((5, 0), (6, 0)), ((3, 0), (3.5, 1)), ((4, 0), (3.5, 1)), ((3.5, 1), (5.5, 1)), ((6, 0), (5.5, 1))]
_NWC_B = [(8, 0), (9, 0), (10, 0), (8, 1), (10, 1)]
_NWC_B_SEGS = [((8, 0), (9, 0)), ((9, 0), (10, 0)), ((8, 0), (8, 1)), ((8, 1), (9, 0)), ((9, 0), (10, 1)), ((10, 0), (10, 1))]
_QR_A = [(1.5, 0), (2.5, 0), (3.5, 0), (4.5, 0), (2, 1), (4, 1)]
_QR_A_SEGS = [((1.5, 0), (2.5, 0)), ((2.5, 0), (3.5, 0)), ((3.5, 0), (4.5, 0)), ((1.5, 0), (2, 1)), ((2.5, 0), (2, 1)), ((3.5, 0), (4, 1)), ((4.5, 0), (4, 1))]
_QR_B = [(x, 0) for x in range(6, 12)] + [(6.5, 1), (10.5, 1)]
_QR_B_SEGS = [((x, 0), (x + 1, 0)) for x in range(6, 11)] + [((6, 0), (6.5, 1)), ((7, 0), (6.5, 1)), ((10, 0), (10.5, 1)), ((11, 0), (10.5, 1))]
_VWC12 = [(4, 0), (5, 0), (4, 1), (5, 1), (8, 0), (9, 0), (8, 1), (9, 1), (6, 2), (7, 2), (6, 0.5), (7, 0.5)]
_VWC12_SEGS = [
    ((4, 0), (4, 1)), ((4, 1), (5, 0)), ((5, 0), (5, 1)), ((5, 0), (8, 0)), ((5, 0), (6, 2)),
    ((5, 0), (7, 2)), ((6, 2), (6, 0.5)), ((6, 0.5), (8, 0)), ((7, 2), (7, 0.5)), ((7, 2), (8, 0)),
    ((8, 0), (8, 1)), ((8, 0), (9, 1)), ((9, 0), (9, 1)),
    # not drawn; one of several single edges that reproduce the printed polynomial
    ((6, 2), (7, 2)),
]  # fmt: skip


POLYNOMIALS: list[Fixture] = [
    Fixture("K1,3", _expr("K1,3"), (1, 4, 3, 1), "K1,3"),
    Fixture("K24+(K3|K3|K4)", _expr("K24 + (K3 | K3 | K4)"), (1, 34, 33, 36), "K24 + (K3 ⊔ K3 ⊔ K4), not unimodal"),
    Fixture("P5", _expr("P5"), (1, 5, 6, 1), "P5"),
    Fixture("C7", _expr("C7"), (1, 7, 14, 7), "C7"),
    Fixture("C5", _expr("C5"), (1, 5, 5), "C5"),
    Fixture("K4-e", _expr("deledge(K4, 0, 1)"), (1, 4, 1), "K4 minus an edge"),
    Fixture("K10+E6", _expr("K10 + E6"), (1, 16, 15, 20, 15, 6, 1), "K10 + 6K1, quasi-regularizable, not unimodal"),
    Fixture(
        "(K24+E6)|(K25+E6)",
        _expr("(K24 + E6) | (K25 + E6)"),
        (1, 61, 960, 955, 1475, 1527, 1218, 841, 495, 220, 66, 12, 1),
        "disconnected quasi-regularizable, not unimodal",
    ),
    Fixture("4*C5", _expr("4*C5"), (1, 20, 170, 800, 2275, 4000, 4250, 2500, 625), "4 disjoint C5"),
    Fixture("(K95+4*K3)|C5", _expr("(K95 + 4*K3) | C5"), (1, 112, 594, 913, 891, 945, 405), "imperfect, not unimodal"),
    Fixture(
        "addedge((K97+4*K3)|C5,0,109)",
        _expr("addedge((K97 + 4*K3) | C5, 0, 109)"),
        (1, 114, 603, 921, 891, 945, 405),
        "connected imperfect, not unimodal",
    ),
    Fixture("nwc-A", _drawn(_NWC_A, _NWC_A_SEGS), (1, 6, 8, 1), "non-well-covered drawing, left", True),
    Fixture("nwc-B", _drawn(_NWC_B, _NWC_B_SEGS), (1, 5, 4), "non-well-covered drawing, right", True),
    Fixture("qr-A", _drawn(_QR_A, _QR_A_SEGS), (1, 6, 8), "quasi-regularizable drawing, left", True),
    Fixture("qr-B", _drawn(_QR_B, _QR_B_SEGS), (1, 8, 19, 12), "quasi-regularizable drawing, right", True),
    Fixture("vwc-12", _drawn(_VWC12, _VWC12_SEGS), (1, 12, 52, 110, 123, 70, 16), "12-vertex very well-covered drawing", True),
]


def _expect(cond: bool, detail: str) -> tuple[bool, str]:
    return bool(cond), detail


def _k13_prop2() -> tuple[bool, str]:
    v = verify_prop2(build("K1,3"))
    ii = v.part("ii").violation
    got = None if ii is None else (ii.k, ii.left, ii.right)
    return _expect(v.premise_holds is False and got == (2, 4, 3), f"premise={v.premise_holds} (ii) violation={got}")


def _k13_cor1() -> tuple[bool, str]:
    fv = verify_cor1(build("K1,3")).first_violation
    got = None if fv is None else (fv.k, fv.left, fv.right)
    return _expect(got == (1, 4, 3), f"violation={got}")


def _k13_qr() -> tuple[bool, str]:
    r = classifiers.is_quasi_regularizable(build("K1,3"))
    return _expect(r.value is False and r.witness == (1, 2, 3), f"value={r.value} witness={r.witness}")


def _k3star() -> tuple[bool, str]:
    G = build("K3^*")
    prof = omega_profile(G)
    vwc = classifiers.is_very_well_covered(G)
    ok = bool(vwc) and prof.omegas[1] == 2 and prof.clique_number == 3 and (G.n, G.m) == (6, 6)
    return _expect(ok, f"vwc={vwc.value} omega_1={prof.omegas[1]} omega={prof.clique_number}")


def _c7() -> tuple[bool, str]:
    G = build("C7")
    prof = omega_profile(G)
    wc, vwc = classifiers.is_well_covered(G), classifiers.is_very_well_covered(G)
    ok = bool(wc) and not vwc and prof.omegas[1] == prof.clique_number == 2
    return _expect(ok, f"wc={wc.value} vwc={vwc.value} omega_1={prof.omegas[1]} omega={prof.clique_number}")


def _p5() -> tuple[bool, str]:
    G = build("P5")
    wc = classifiers.is_well_covered(G)
    v = verify_cor1(G)
    return _expect(not wc and v.conclusion_holds, f"wc={wc.value} cor1 holds={v.conclusion_holds}")


def _k4e() -> tuple[bool, str]:
    G = build("deledge(K4, 0, 1)")
    a, w = stability_number(G), clique_number(G)
    return _expect((a, w) == (2, 3), f"alpha={a} omega={w}")


def _k10_e6() -> tuple[bool, str]:
    G = build("K10 + E6")
    qr = classifiers.is_quasi_regularizable(G)
    v = verify_prop1(G)
    ok = bool(qr) and v.premise_holds is False and not shape(independence_polynomial(G)).unimodal
    return _expect(ok, f"qr={qr.value} prop1 premise={v.premise_holds}")


def _4c5_prop3() -> tuple[bool, str]:
    v = verify_prop3(build("4*C5"))
    fv = v.first_violation
    got = None if fv is None else (fv.k, fv.left, fv.right)
    return _expect(v.premise_holds is False and got == (5, 4000, 4250), f"premise={v.premise_holds} violation={got}")


def _c7_prop3() -> tuple[bool, str]:
    v = verify_prop3(build("C7"))
    return _expect(v.premise_holds is False and v.conclusion_holds and v.data["tail_from"] == 2, f"premise={v.premise_holds} holds={v.conclusion_holds}")


def _dips(expr: str, head: int, dip: int) -> Callable[[], tuple[bool, str]]:
    def run() -> tuple[bool, str]:
        rep = shape(independence_polynomial(build(expr), max_n=None))
        got = (rep.unimodal, rep.head_nondecreasing_through, rep.valley)
        return _expect(got == (False, head, dip), f"(unimodal, head_through, valley)={got}")

    return run


def _printed_vwc12() -> tuple[bool, str]:
    p = (1, 12, 52, 110, 123, 70, 16)
    rep = shape(p)
    main = verify_main_theorem_seq(p, True).conclusion_holds
    return _expect(rep.unimodal and rep.log_concave and main, f"unimodal={rep.unimodal} log_concave={rep.log_concave}")


def _printed_nwc() -> tuple[bool, str]:
    a = verify_prop2_seq((1, 6, 8, 1))
    b = verify_prop2_seq((1, 5, 4))
    fa = a.part("i").violation
    got = None if fa is None else (fa.k, fa.left, fa.right)
    ok = got == (2, 8, 3) and a.part("ii").holds and b.conclusion_holds
    return _expect(ok, f"left (i) violation={got}; right holds={b.conclusion_holds}")


def _printed_qr() -> tuple[bool, str]:
    a = verify_prop1_seq((1, 6, 8))
    b = verify_prop1_seq((1, 8, 19, 12))
    ok = a.part("iii").holds is False and b.part("iii").holds is True
    return _expect(ok, f"left (iii)={a.part('iii').holds}; right (iii)={b.part('iii').holds}")


def _drawn_classes() -> tuple[bool, str]:
    nwc_a, nwc_b = _drawn(_NWC_A, _NWC_A_SEGS)(), _drawn(_NWC_B, _NWC_B_SEGS)()
    qr_a, qr_b = _drawn(_QR_A, _QR_A_SEGS)(), _drawn(_QR_B, _QR_B_SEGS)()
    vwc12 = _drawn(_VWC12, _VWC12_SEGS)()
    got = (
        bool(classifiers.is_well_covered(nwc_a)),
        bool(classifiers.is_well_covered(nwc_b)),
        bool(classifiers.is_quasi_regularizable(qr_a)),
        bool(classifiers.is_well_covered(qr_a)),
        bool(classifiers.is_very_well_covered(qr_a)),
        bool(classifiers.is_quasi_regularizable(qr_b)),
        bool(classifiers.is_well_covered(qr_b)),
        bool(classifiers.is_very_well_covered(vwc12)),
    )
    return _expect(got == (False, False, True, True, False, True, False, True), f"classes={got}")


def _window() -> tuple[bool, str]:
    w9, w10 = roller_coaster_window(9), roller_coaster_window(10)
    ok = (w9.lower, w9.upper, w10.lower, w10.upper) == (5, 6, 5, 7)
    return _expect(ok, f"alpha=9 -> {w9.lower}..{w9.upper}; alpha=10 -> {w10.lower}..{w10.upper}")


CHECKS: list[CheckFixture] = [
    CheckFixture("K1,3 prop2 (ii) violation", _k13_prop2),
    CheckFixture("K1,3 cor1 violation", _k13_cor1),
    CheckFixture("K1,3 not quasi-regularizable", _k13_qr),
    CheckFixture("K3* very well-covered, omega_1=2, omega=3", _k3star),
    CheckFixture("C7 well-covered, not very, omega_1=omega=2", _c7),
    CheckFixture("P5 not well-covered, satisfies cor1", _p5),
    CheckFixture("K4-e alpha=2 < omega=3", _k4e),
    CheckFixture("K10+E6 quasi-regularizable, outside prop1", _k10_e6),
    CheckFixture("4*C5 prop3 violation", _4c5_prop3),
    CheckFixture("C7 satisfies prop3 tail", _c7_prop3),
    CheckFixture("K24+(K3|K3|K4) dip", _dips("K24 + (K3 | K3 | K4)", 1, 2)),
    CheckFixture("(K24+E6)|(K25+E6) dips", _dips("(K24 + E6) | (K25 + E6)", 2, 3)),
    CheckFixture("(K95+4*K3)|C5 dips", _dips("(K95 + 4*K3) | C5", 3, 4)),
    CheckFixture("printed 12-vertex polynomial log-concave", _printed_vwc12),
    CheckFixture("printed non-well-covered polynomials", _printed_nwc),
    CheckFixture("printed quasi-regularizable polynomials", _printed_qr),
    CheckFixture("window alpha=9 and alpha=10", _window),
    CheckFixture("drawn graphs classify as captioned", _drawn_classes, reconstructed=True),
]


def run_catalog(include_reconstructed: bool = False) -> list[FixtureResult]:
    results = []
    for fx in POLYNOMIALS:
        if fx.reconstructed and not include_reconstructed:
            continue
        try:
            got = tuple(independence_polynomial(fx.build(), max_n=None))
            ok = got == fx.expected
            detail = f"got {list(got)}" + ("" if ok else f", expected {list(fx.expected)}")
        except Exception as exc:  # a broken fixture is a mismatch, not a crash
            ok, detail = False, f"error: {exc}"
        results.append(FixtureResult(f"polynomial {fx.name}", ok, detail))
    for check in CHECKS:
        if check.reconstructed and not include_reconstructed:
            continue
        try:
            ok, detail = check.run()
        except Exception as exc:
            ok, detail = False, f"error: {exc}"
        results.append(FixtureResult(check.name, ok, detail))
    return results
