"""Hypothesis strategies for graphs."""

import numpy as np
from hypothesis import strategies as st

from app.graphs.graph import Graph, random_connected_graph


@st.composite
def graphs(draw: st.DrawFn, min_vertices: int = 0, max_vertices: int = 8) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, kept in zip(pairs, keep) if kept])


@st.composite
def connected_graphs(draw: st.DrawFn, min_vertices: int = 1, max_vertices: int = 5) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected_graph(n, np.random.default_rng(seed))


@st.composite
def relabelled(draw: st.DrawFn, max_vertices: int = 8) -> tuple[Graph, list[int]]:
    """A graph together with a permutation of its vertices."""
    graph = draw(graphs(max_vertices=max_vertices))
    images = draw(st.permutations(list(range(graph.n))))
    return graph, list(images)
