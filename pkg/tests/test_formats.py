"""Tests for graph6 and DOT serialization."""

import networkx as nx
import pytest
from hypothesis import given

from app.core.errors import Graph6ParseError
from app.graphs.formats import emit_dot, emit_graph6, parse_graph6
from app.graphs.graph import Graph, complete_graph, empty_graph, path_graph
from tests.interop import to_networkx
from tests.strategies import graphs


def test_known_encodings():
    assert emit_graph6(complete_graph(4)) == "C~"
    assert emit_graph6(path_graph(4)) == "Ch"
    assert emit_graph6(empty_graph(0)) == "?"


def test_parse_with_header():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)
    assert parse_graph6("Ch\n") == path_graph(4)


def test_parse_rejects_bad_byte():
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6("C!")
    assert info.value.offset == 1


def test_parse_rejects_wrong_length():
    with pytest.raises(Graph6ParseError):
        parse_graph6("C")
    with pytest.raises(Graph6ParseError):
        parse_graph6("C~~")


def test_parse_rejects_nonzero_padding():
    assert parse_graph6("A_") == path_graph(2)
    with pytest.raises(Graph6ParseError):
        parse_graph6("A`")


def test_parse_rejects_truncated_prefix():
    with pytest.raises(Graph6ParseError):
        parse_graph6("~??")


def test_medium_size_prefix():
    g = path_graph(70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@given(graphs(min_vertices=1, max_vertices=20))
def test_networkx_reads_our_graph6(graph: Graph):
    theirs = nx.from_graph6_bytes(emit_graph6(graph).encode("ascii"))
    assert sorted(tuple(sorted(e)) for e in theirs.edges()) == list(graph.iter_edges())
    assert theirs.number_of_nodes() == graph.n


@given(graphs(min_vertices=1, max_vertices=20))
def test_we_read_networkx_graph6(graph: Graph):
    data = nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii")
    assert parse_graph6(data) == graph


def test_emit_dot():
    text = emit_dot(path_graph(3).with_labels(["a", "b", "c"]), "P3")
    assert text.startswith('graph "P3" {')
    assert 'n2 [label="b"];' in text
    assert "n1 -- n2;" in text
    assert text.rstrip().endswith("}")


def test_emit_dot_clusters():
    text = emit_dot(empty_graph(4), clusters=[[0, 1], [2, 3]])
    assert text.count("subgraph cluster_") == 2
