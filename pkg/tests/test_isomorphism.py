"""Tests for mapping verification, isomorphism search and automorphism groups."""

import networkx as nx
import pytest
from hypothesis import given, settings

from app.core.errors import MappingError, ResourceError
from app.graphs.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from app.graphs.isomorphism import (
    VertexMapping,
    are_isomorphic,
    automorphism_count,
    automorphism_group,
    refine,
    verify_mapping,
)
from app.graphs.oracles import exhaustive_automorphism_count
from app.graphs.staircase import psi_permutation, staircase_graph
from app.graphs.tokens import token_graph
from tests.interop import to_networkx
from tests.strategies import graphs, relabelled


def _token_path(n: int) -> Graph:
    return token_graph(path_graph(n), 3).graph


def test_vertex_mapping_basics():
    m = VertexMapping.of([1, 2, 0])
    assert m.inverse() == VertexMapping.of([2, 0, 1])
    assert m.compose(m.inverse()).is_identity()
    assert m.order == 3
    assert m.to_pairs() == [[1, 2], [2, 3], [3, 1]]
    assert VertexMapping.identity(4).order == 1


def test_verify_mapping():
    g = path_graph(4)
    assert verify_mapping(g, g, VertexMapping.identity(4))
    assert verify_mapping(g, g, VertexMapping.of([3, 2, 1, 0]))
    # endpoint and centre of P_3 are not similar
    assert not verify_mapping(path_graph(3), path_graph(3), VertexMapping.of([1, 0, 2]))


def test_verify_mapping_rejects_non_bijection():
    with pytest.raises(MappingError):
        verify_mapping(path_graph(3), path_graph(3), VertexMapping.of([0, 0, 1]))
    with pytest.raises(MappingError):
        verify_mapping(path_graph(3), path_graph(4), VertexMapping.identity(3))


def test_psi_as_mapping():
    mapping = VertexMapping.of(psi_permutation(5))
    assert verify_mapping(_token_path(5), staircase_graph(5).graph, mapping)


def test_refine_path():
    assert len(set(refine(path_graph(5), [0] * 5))) == 3
    assert len(set(refine(cycle_graph(6), [0] * 6))) == 1


def test_are_isomorphic_examples():
    witness = are_isomorphic(_token_path(7), staircase_graph(7).graph)
    assert witness is not None
    assert verify_mapping(_token_path(7), staircase_graph(7).graph, witness)
    g = cycle_graph(6)
    assert are_isomorphic(g, g) is not None
    assert are_isomorphic(path_graph(4), star_graph(4)) is None
    assert are_isomorphic(empty_graph(0), empty_graph(0)) == VertexMapping(())


def test_are_isomorphic_budget():
    with pytest.raises(ResourceError):
        are_isomorphic(path_graph(6), path_graph(6), budget=5)


def test_same_degrees_not_isomorphic():
    # C_6 and 2C_3 share every screened invariant except triangles
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert are_isomorphic(cycle_graph(6), two_triangles) is None


@settings(max_examples=60, deadline=None)
@given(relabelled(max_vertices=9))
def test_relabelled_graph_is_isomorphic(case: tuple[Graph, list[int]]):
    graph, images = case
    moved = graph.permute(images)
    forward = are_isomorphic(graph, moved)
    backward = are_isomorphic(moved, graph)
    assert forward is not None and backward is not None
    assert verify_mapping(graph, moved, forward)
    assert verify_mapping(moved, graph, forward.inverse())


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=7), graphs(max_vertices=7))
def test_isomorphism_matches_networkx(g: Graph, h: Graph):
    expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
    assert (are_isomorphic(g, h) is not None) == expected


def test_automorphism_examples():
    assert automorphism_count(_token_path(3)).order == 1
    six = automorphism_group(staircase_graph(6).graph)
    assert six.order == 4
    assert six.element_orders == (1, 2, 2, 2)
    assert six.structure() == "Z2xZ2"
    five = automorphism_group(staircase_graph(5).graph)
    assert five.order == 2
    assert five.structure() == "Z2"


def test_token_path_and_staircase_groups_agree():
    for n in range(3, 8):
        assert automorphism_count(_token_path(n)).order == automorphism_count(
            staircase_graph(n).graph
        ).order


def test_known_groups():
    assert automorphism_group(complete_graph(4)).order == 24
    cyclic = automorphism_group(cycle_graph(5))
    assert cyclic.order == 10
    assert cyclic.element_orders is not None and max(cyclic.element_orders) == 5
    empty = automorphism_group(empty_graph(5))
    assert empty.order == 120
    assert empty.element_orders is None
    assert empty.structure() == "order 120"


def test_generators_are_automorphisms():
    g = cycle_graph(6)
    for generator in automorphism_group(g).generators:
        assert verify_mapping(g, g, generator)


def test_automorphism_budget():
    with pytest.raises(ResourceError):
        automorphism_group(path_graph(10), budget=5)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=6))
def test_automorphism_count_matches_brute_force(graph: Graph):
    assert automorphism_group(graph).order == exhaustive_automorphism_count(graph)
