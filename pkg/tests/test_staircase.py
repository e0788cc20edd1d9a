"""Tests for CS_n, the map psi and the closed forms."""

from math import comb

import pytest

from app.core.errors import DomainError, InvalidSizeError
from app.graphs.graph import path_graph
from app.graphs.invariants import all_pairs_distances, is_proper_coloring
from app.graphs.isomorphism import VertexMapping, verify_mapping
from app.graphs.staircase import (
    StairCoord,
    closed_form_invariants,
    conjecture_matching_set,
    conjectured_matching_number,
    conjectured_matching_sum,
    is_matching,
    matching_edges,
    parity_two_coloring,
    psi,
    psi_inverse,
    psi_of_labels,
    psi_permutation,
    reflection,
    staircase_coords,
    staircase_distance,
    staircase_graph,
)
from app.graphs.tokens import TokenVertex, token_graph


def test_vertex_count():
    for n in range(3, 13):
        assert len(staircase_coords(n)) == comb(n, 3)


def test_cs3_and_cs4():
    assert staircase_graph(3).graph.n == 1
    sg = staircase_graph(4)
    assert sg.coords == (
        StairCoord(1, 1, 1),
        StairCoord(1, 1, 2),
        StairCoord(2, 1, 1),
        StairCoord(2, 2, 1),
    )
    # (1,1,2) - (1,1,1) - (2,1,1) - (2,2,1)
    assert sorted(sg.graph.iter_edges()) == [(0, 1), (0, 2), (2, 3)]


def test_no_edge_to_missing_vertex():
    sg = staircase_graph(4)
    assert not StairCoord(2, 1, 2).is_valid(4)
    assert sg.graph.degree(sg.index_of(StairCoord(1, 1, 2))) == 1


def test_index_of_rejects_invalid():
    with pytest.raises(DomainError):
        staircase_graph(5).index_of(StairCoord(4, 1, 1))


def test_small_n_rejected():
    with pytest.raises(InvalidSizeError):
        staircase_graph(2)


def test_psi_examples():
    assert psi(TokenVertex((0, 1, 2)), 5) == StairCoord(1, 1, 3)
    assert psi_of_labels([3, 1, 2], 5) == StairCoord(1, 1, 3)
    assert psi_of_labels([2, 4, 5], 5) == StairCoord(3, 2, 1)
    with pytest.raises(DomainError):
        psi_of_labels([1, 1, 2], 5)
    with pytest.raises(DomainError):
        psi(TokenVertex((0, 1)), 5)


def test_psi_inverse():
    for n in range(3, 9):
        for coord in staircase_coords(n):
            assert psi(psi_inverse(coord, n), n) == coord


def test_psi_is_isomorphism():
    for n in range(3, 11):
        mapping = VertexMapping.of(psi_permutation(n))
        assert verify_mapping(
            token_graph(path_graph(n), 3).graph, staircase_graph(n).graph, mapping
        )


def test_staircase_distance():
    n = 7
    far = staircase_distance(StairCoord(1, 1, n - 2), StairCoord(n - 2, n - 2, 1), n)
    assert far == 3 * (n - 3)
    assert staircase_distance(StairCoord(2, 1, 1), StairCoord(2, 2, 3), n) == 3
    with pytest.raises(InvalidSizeError):
        staircase_distance(StairCoord(1, 1, 1), StairCoord(1, 1, 1), 3)
    with pytest.raises(DomainError):
        staircase_distance(StairCoord(1, 2, 1), StairCoord(1, 1, 1), n)


@pytest.mark.parametrize("n", range(4, 11))
def test_staircase_distance_matches_bfs(n: int):
    sg = staircase_graph(n)
    bfs = all_pairs_distances(sg.graph)
    for a, ca in enumerate(sg.coords):
        for b, cb in enumerate(sg.coords):
            assert staircase_distance(ca, cb, n) == bfs[a, b]


def test_closed_forms():
    assert closed_form_invariants(3).model_dump() == {
        "n": 3, "chi": 1, "omega": 1, "alpha": 1, "diam": 0,
    }
    six = closed_form_invariants(6)
    assert (six.chi, six.omega, six.alpha, six.diam) == (2, 2, 10, 9)
    assert closed_form_invariants(5).alpha == 6
    assert closed_form_invariants(7).alpha == 19


def test_reflection_is_involutive_automorphism():
    for n in range(3, 11):
        g = staircase_graph(n).graph
        mapping = VertexMapping.of(reflection(n))
        assert verify_mapping(g, g, mapping)
        assert mapping.compose(mapping).is_identity()


def test_parity_coloring_is_proper():
    for n in range(3, 11):
        sg = staircase_graph(n)
        assert is_proper_coloring(sg.graph, parity_two_coloring(sg))


def test_conjectured_numbers():
    expected = {4: 2, 5: 4, 6: 10, 7: 16, 8: 28, 9: 40, 10: 60}
    for n, value in expected.items():
        assert conjectured_matching_number(n) == value
    for n in range(3, 25):
        assert conjectured_matching_sum(n) == conjectured_matching_number(n)


def test_conjecture_matching_set():
    for n in range(4, 13):
        sg = staircase_graph(n)
        edges = matching_edges(sg, conjecture_matching_set(n))
        assert is_matching(edges, sg.graph)
        assert len(edges) == conjectured_matching_number(n)


def test_matching_edges_rejects_non_edge():
    sg = staircase_graph(5)
    with pytest.raises(DomainError):
        matching_edges(sg, [(StairCoord(1, 1, 1), StairCoord(2, 2, 1))])


def test_is_matching():
    assert is_matching([(0, 1), (2, 3)])
    assert not is_matching([(0, 1), (1, 2)])
    assert not is_matching([(0, 2)], path_graph(3))
