"""Solvers against brute-force enumeration on random small graphs."""

import numpy as np
import pytest
from hypothesis import given, settings

from app.core.errors import ResourceError
from app.graphs.graph import Graph, complete_graph, cycle_graph, path_graph, random_graph
from app.graphs.invariants import (
    chromatic_number,
    clique_number,
    independence_number,
    is_bipartite,
    matching_number,
)
from app.graphs.oracles import (
    exhaustive_automorphism_count,
    exhaustive_chromatic_number,
    exhaustive_clique_number,
    exhaustive_independence_number,
    exhaustive_matching_number,
)
from tests.interop import from_networkx, to_networkx
from tests.strategies import graphs


def test_exhaustive_values():
    assert exhaustive_independence_number(cycle_graph(5)) == 2
    assert exhaustive_clique_number(complete_graph(4)) == 4
    assert exhaustive_chromatic_number(cycle_graph(5)) == 3
    assert exhaustive_matching_number(path_graph(5)) == 2
    assert exhaustive_automorphism_count(cycle_graph(5)) == 10


def test_exhaustive_caps():
    with pytest.raises(ResourceError):
        exhaustive_automorphism_count(path_graph(9))
    with pytest.raises(ResourceError):
        exhaustive_matching_number(path_graph(17))


def test_networkx_bridge():
    g = cycle_graph(5)
    assert from_networkx(to_networkx(g)) == g


@settings(max_examples=80, deadline=None)
@given(graphs(min_vertices=1, max_vertices=10))
def test_solvers_match_enumeration(graph: Graph):
    alpha = exhaustive_independence_number(graph)
    assert independence_number(graph, use_konig=False) == alpha
    assert independence_number(graph) == alpha
    assert clique_number(graph) == exhaustive_clique_number(graph)
    assert chromatic_number(graph) == exhaustive_chromatic_number(graph)
    assert matching_number(graph) == exhaustive_matching_number(graph)


@settings(max_examples=60, deadline=None)
@given(graphs(min_vertices=1, max_vertices=10))
def test_konig_equality(graph: Graph):
    if is_bipartite(graph).bipartite:
        assert independence_number(graph) + matching_number(graph) == graph.n
    assert clique_number(graph) <= chromatic_number(graph)


def test_seeded_batch_up_to_twelve_vertices():
    rng = np.random.default_rng(42)
    for _ in range(20):
        n = int(rng.integers(1, 13))
        g = random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
        assert independence_number(g, use_konig=False) == exhaustive_independence_number(g)
        assert clique_number(g) == exhaustive_clique_number(g)
        assert chromatic_number(g) == exhaustive_chromatic_number(g)
        assert matching_number(g) == exhaustive_matching_number(g)
