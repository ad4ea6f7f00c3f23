import pytest
from hypothesis import given
from hypothesis import strategies as st

from indpoly.dsl import Atom, DisjointUnion, EdgeEdit, Repeat, Star, Sum, build, eval_expr, parse_expr, render_expr
from indpoly.formats import ParseError
from indpoly.graph import complete_bipartite_graph, complete_graph, connected_components
from indpoly.independence import independence_polynomial


def test_precedence():
    e = parse_expr("K24 + K3 | K3 | K4")
    assert isinstance(e, Sum) and isinstance(e.right, DisjointUnion)
    assert parse_expr("K24 + (K3 | K3 | K4)") == e
    assert parse_expr("2*C5^*") == Repeat("*", 2, Star(Atom("C", (5,))))
    assert parse_expr("(K2 + K1) | E2") == DisjointUnion(Sum(Atom("K", (2,)), Atom("K", (1,))), Atom("E", (2,)))


def test_bipartite_atom():
    assert parse_expr("K1,3") == Atom("KB", (1, 3))
    assert build("K2,3") == complete_bipartite_graph(2, 3)
    # inside an edge edit the trailing ', INT , INT' belongs to the call
    e = parse_expr("deledge(K4, 0, 1)")
    assert e == EdgeEdit("deledge", Atom("K", (4,)), 0, 1)
    e = parse_expr("addedge(K1,3, 1, 2)")
    assert e == EdgeEdit("addedge", Atom("KB", (1, 3)), 1, 2)


@pytest.mark.parametrize(
    "expr,n,m,coeffs",
    [
        ("K24 + (K3 | K3 | K4)", 34, 276 + 3 + 3 + 6 + 24 * 10, (1, 34, 33, 36)),
        ("K10 + E6", 16, 105, (1, 16, 15, 20, 15, 6, 1)),
        ("4*C5", 20, 20, (1, 20, 170, 800, 2275, 4000, 4250, 2500, 625)),
        ("deledge(K4, 0, 1)", 4, 5, (1, 4, 1)),
        ("K3^*", 6, 6, (1, 6, 9, 4)),
        ("3#E2", 6, 12, (1, 6, 3)),
    ],
)
def test_examples(expr, n, m, coeffs):
    G = build(expr)
    assert (G.n, G.m) == (n, m)
    assert independence_polynomial(G, max_n=None) == coeffs


def test_connected_edge_variant():
    G = build("addedge((K97 + 4*K3) | C5, 0, 109)")
    assert G.n == 114 and len(connected_components(G)) == 1
    assert independence_polynomial(G, max_n=None) == (1, 114, 603, 921, 891, 945, 405)


@pytest.mark.parametrize(
    "text",
    ["", "C2", "K0", "K", "K3 +", "(K3", "K3)", "0*K2", "3K2", "deledge(K4, 0)", "deledge(K4, 0, 0)",
     "addedge(K3, 0, 3)", "deledge(K3, 0, 7)", "K3 ^", "Q5", "K1,0", "K3 K3"],
)
def test_errors(text):
    with pytest.raises(ParseError):
        build(text)


def test_error_position():
    with pytest.raises(ParseError, match="position 6"):
        build("K3 + C2")


def exprs():
    atoms = st.one_of(
        st.builds(lambda n: f"K{n}", st.integers(1, 3)),
        st.builds(lambda n: f"P{n}", st.integers(1, 3)),
        st.builds(lambda n: f"C{n}", st.integers(3, 4)),
        st.builds(lambda n: f"E{n}", st.integers(1, 2)),
        st.builds(lambda a, b: f"K{a},{b}", st.integers(1, 2), st.integers(1, 2)),
    )

    def extend(children):
        return st.one_of(
            st.builds(lambda a, b: f"({a} + {b})", children, children),
            st.builds(lambda a, b: f"({a} | {b})", children, children),
            st.builds(lambda k, a: f"{k}*({a})", st.integers(1, 2), children),
            st.builds(lambda k, a: f"{k}#({a})", st.integers(1, 2), children),
            st.builds(lambda a: f"({a})^*", children),
        )

    return st.recursive(atoms, extend, max_leaves=4)


@given(exprs())
def test_render_parse_roundtrip(text):
    e = parse_expr(text)
    again = parse_expr(render_expr(e))
    assert again == e
    assert eval_expr(again) == eval_expr(e)


@given(exprs(), st.integers(1, 3))
def test_vertex_counts(text, k):
    G = build(text)
    assert build(f"{k}*({text})").n == k * G.n
    assert build(f"{k}#({text})").n == k * G.n
    assert build(f"({text})^*").n == 2 * G.n


def test_clique_sum():
    assert build("K2 + K3") == complete_graph(5)
