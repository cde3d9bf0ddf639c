import json

import networkx as nx
import pytest
from hypothesis import given

from gmfrt.errors import MalformedHeaderError, TruncatedBitstreamError
from gmfrt.formats import parse_edgelist, parse_graph6, read_graph, render, to_dot, to_edgelist, to_graph6
from gmfrt.graph import from_edge_list
from strategies import connected_graphs


def _nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_path_on_three_vertices():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert to_graph6(p3) == "Bg"
    assert parse_graph6("B_").edges == ((0, 1),)


@given(connected_graphs(n_max=12))
def test_graph6_matches_networkx(g):
    assert to_graph6(g) == _nx_graph6(g)
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_large_n_encoding():
    g = from_edge_list(70, [(i, i + 1) for i in range(69)])
    assert to_graph6(g) == _nx_graph6(g)
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<Bg").m == 2


def test_graph6_errors():
    with pytest.raises(MalformedHeaderError):
        parse_graph6("")
    with pytest.raises(TruncatedBitstreamError):
        parse_graph6("D")


@given(connected_graphs())
def test_edgelist_roundtrip(g):
    assert parse_edgelist(to_edgelist(g)) == g
    assert read_graph(to_edgelist(g)) == g
    assert read_graph(to_graph6(g)) == g


def test_read_graph_json_wrapper():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    text = json.dumps({"format": "edgelist", "graph": to_edgelist(g)})
    assert read_graph(text) == g


def test_dot_output():
    dot = to_dot(from_edge_list(2, [(0, 1)]))
    assert dot.startswith("graph") and "0 -- 1" in dot
    assert render(from_edge_list(2, [(0, 1)]), "dot") == dot
