"""Tests for Hopcroft-Karp and the blossom matching."""

import networkx as nx
from hypothesis import given, settings

from app.graphs.graph import Graph, complete_graph, cycle_graph, path_graph
from app.graphs.invariants import is_bipartite
from app.graphs.matching import (
    HopcroftKarp,
    bipartite_matching,
    general_matching,
    maximum_matching,
)
from app.graphs.staircase import is_matching, staircase_graph
from tests.interop import from_networkx, to_networkx
from tests.strategies import graphs


def test_hopcroft_karp_complete_bipartite():
    left = {0: [3, 4, 5], 1: [3, 4, 5], 2: [3, 4, 5]}
    pairs = HopcroftKarp(left).maximum_matching()
    assert len(pairs) == 3
    assert sorted(pairs.values()) == [3, 4, 5]


def test_hopcroft_karp_needs_augmenting_path():
    # greedy 0-3 blocks 1; the augmenting path reroutes 0 to 4
    left = {0: [3, 4], 1: [3]}
    assert len(HopcroftKarp(left).maximum_matching()) == 2


def test_bipartite_matching_on_path():
    g = path_graph(5)
    sides = is_bipartite(g).coloring
    assert sides is not None
    edges = bipartite_matching(g, sides)
    assert len(edges) == 2
    assert is_matching(edges, g)


def test_blossom_small_graphs():
    assert len(general_matching(cycle_graph(5))) == 2
    assert len(general_matching(complete_graph(5))) == 2
    assert len(general_matching(from_networkx(nx.petersen_graph()))) == 5


def test_blossom_through_odd_cycle():
    # triangle with a pendant path on two corners: perfect matching needs the blossom
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4), (4, 5)])
    assert len(general_matching(g)) == 3


def test_staircase_matchings_agree():
    for n in range(4, 9):
        g = staircase_graph(n).graph
        sides = is_bipartite(g).coloring
        assert len(maximum_matching(g, sides)) == len(maximum_matching(g))


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=10))
def test_matches_networkx(graph: Graph):
    expected = len(nx.max_weight_matching(to_networkx(graph), maxcardinality=True))
    found = general_matching(graph)
    assert len(found) == expected
    assert is_matching(found, graph)
    bip = is_bipartite(graph)
    if bip.bipartite and bip.coloring is not None:
        assert len(bipartite_matching(graph, bip.coloring)) == expected
