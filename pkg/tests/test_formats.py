import networkx as nx
import pytest
from hypothesis import given

from indpoly.corpus import all_graphs_up_to
from indpoly.formats import (
    ParseError,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
    write_edge_list,
    write_graph6,
)
from indpoly.graph import complete_graph, empty_graph, make_graph

from .conftest import graphs


def nx_graph6(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return nx.to_graph6_bytes(H, header=False).decode().strip()


def test_star_decodes():
    G = parse_graph6("D?{")
    assert G.n == 5 and G.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert write_graph6(G) == "D?{"


def test_small_codes():
    assert parse_graph6("@") == empty_graph(1)
    assert parse_graph6("?") == empty_graph(0)
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


def test_long_size_header():
    G = empty_graph(100)
    text = write_graph6(G)
    assert text.startswith("~?@c") and parse_graph6(text) == G
    assert text == nx_graph6(G)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("A", "truncated adjacency"),
        ("A_?", "trailing"),
        ("A`", "padding"),
        ("D?{ x", "outside"),
        ("~?A", "truncated 4-byte"),
        ("~??D", "non-canonical"),
        ("~~?????D", "non-canonical long"),
    ],
)
def test_graph6_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_graph6(text)


def test_graph6_lines_report_line_number():
    assert len(list(read_graph6_lines(["@", "", "A_"]))) == 2
    with pytest.raises(ParseError, match="line 2"):
        list(read_graph6_lines(["@", "A"]))


@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(G):
    assert write_graph6(G) == nx_graph6(G)
    assert parse_graph6(write_graph6(G)) == G


def test_graph6_roundtrip_exhaustive():
    count = 0
    for G in all_graphs_up_to(6):
        assert parse_graph6(write_graph6(G)) == G
        count += 1
    assert count == 1 + 2 + 8 + 64 + 1024 + 32768


def test_edge_list_roundtrip():
    G = make_graph(4, [(0, 1), (2, 3)])
    assert parse_edge_list(write_edge_list(G)) == G
    assert parse_edge_list("# comment\nn 3\n\n0 1  # trailing\n") == make_graph(3, [(0, 1)])
    assert parse_edge_list("n 0\n") == empty_graph(0)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "missing"),
        ("0 1\n", "header"),
        ("n 3\n0 0\n", "loop"),
        ("n 3\n0 3\n", "out of range"),
        ("n 3\n0\n", "expected 'u v'"),
        ("n 3\n0 x\n", "not an integer"),
        ("n -2\n", "negative"),
        ("n 3\n1.5 2\n", "not an integer"),
    ],
)
def test_edge_list_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edge_list(text)


@given(graphs())
def test_edge_list_property_roundtrip(G):
    assert parse_edge_list(write_edge_list(G)) == G
