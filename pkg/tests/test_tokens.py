"""Tests for subset ranking and token graph construction."""

from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.errors import DomainError, InvalidKError, TokenIndexError
from app.graphs.graph import Graph, complete_graph, path_graph, star_graph
from app.graphs.invariants import connected_components
from app.graphs.isomorphism import VertexMapping, verify_mapping
from app.graphs.tokens import (
    TokenVertex,
    complement_permutation,
    rank_subset,
    token_graph,
    unrank,
)
from tests.interop import from_networkx
from tests.strategies import graphs


def test_rank_colex_order():
    assert [rank_subset(s) for s in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]] == [0, 1, 2, 3]
    assert rank_subset((0, 1, 4)) == 4


def test_rank_rejects_unsorted():
    with pytest.raises(TokenIndexError):
        rank_subset((2, 1))


def test_unrank_roundtrip_and_order():
    vertices = [unrank(r, 7, 3) for r in range(comb(7, 3))]
    assert [rank_subset(v) for v in vertices] == list(range(comb(7, 3)))
    assert vertices == sorted(vertices, key=lambda v: tuple(reversed(v.members)))


def test_unrank_out_of_range():
    with pytest.raises(TokenIndexError):
        unrank(comb(5, 2), 5, 2)


def test_token_vertex():
    v = TokenVertex.of([3, 0, 2])
    assert v.members == (0, 2, 3)
    assert str(v) == "{1,3,4}"
    assert v.k == 3
    assert v.symmetric_difference(TokenVertex((0, 1, 3))) == frozenset({1, 2})
    with pytest.raises(DomainError):
        TokenVertex((2, 1))
    with pytest.raises(DomainError):
        TokenVertex.of([1, 1])


def test_token_graph_of_path():
    built = token_graph(path_graph(4), 3)
    assert built.graph.n == 4
    assert built.graph.num_edges == 3
    assert built.graph.label(0) == "{1,2,3}"
    assert built.index_of(TokenVertex((1, 2, 3))) == 3
    assert built.vertex(3) == TokenVertex((1, 2, 3))


def test_one_token_graph_is_the_base():
    g = star_graph(5)
    assert token_graph(g, 1).graph == g


def test_johnson_graph_edge_count():
    # Γ_k(K_n) is the Johnson graph J(n, k)
    for n, k in [(4, 2), (6, 3), (7, 2)]:
        assert token_graph(complete_graph(n), k).graph.num_edges == comb(n, k) * k * (n - k) // 2


def test_invalid_k():
    with pytest.raises(InvalidKError):
        token_graph(path_graph(3), 0)
    with pytest.raises(InvalidKError):
        token_graph(path_graph(3), 4)


def test_index_of_rejects_foreign_vertex():
    built = token_graph(path_graph(4), 2)
    with pytest.raises(TokenIndexError):
        built.index_of(TokenVertex((0, 1, 2)))
    with pytest.raises(TokenIndexError):
        built.index_of(TokenVertex((0, 4)))


def test_complement_permutation_is_involution_at_half():
    perm = complement_permutation(6, 3)
    assert sorted(perm) == list(range(20))
    assert all(perm[perm[r]] == r for r in range(20))
    assert perm[0] == rank_subset((3, 4, 5))


@settings(max_examples=40, deadline=None)
@given(graphs(min_vertices=1, max_vertices=7), st.integers(1, 4))
def test_token_edges_move_one_token_along_an_edge(graph: Graph, k: int):
    if k > graph.n:
        return
    built = token_graph(graph, k)
    for a, b in built.graph.iter_edges():
        x, y = sorted(built.vertex(a).symmetric_difference(built.vertex(b)))
        assert graph.has_edge(x, y)
    assert built.graph.n == comb(graph.n, k)


def _atlas() -> list[Graph]:
    """Every graph on 1 to 7 vertices, up to isomorphism."""
    return [from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() > 0]


def test_connectivity_follows_the_base_on_the_atlas():
    for graph in _atlas():
        connected = len(connected_components(graph)) == 1
        for k in range(1, graph.n + 1):
            components = len(connected_components(token_graph(graph, k).graph))
            if connected or k == graph.n:
                assert components == 1
            else:
                assert components > 1


def test_complement_map_is_an_isomorphism_on_the_atlas():
    for graph in _atlas():
        n = graph.n
        for k in range(1, n):
            mapping = VertexMapping.of(complement_permutation(n, k))
            low, high = token_graph(graph, k).graph, token_graph(graph, n - k).graph
            assert verify_mapping(low, high, mapping)
