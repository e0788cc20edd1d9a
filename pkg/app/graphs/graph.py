"""Immutable simple graphs with bit-packed adjacency.

Vertex ids are dense (0..n-1). Row ``adjacency[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge. Human-facing labels default to the 1-based id.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from app.core.errors import DomainError, InvalidSizeError

Edge = tuple[int, int]
EdgeList = frozenset[Edge]


def edge_key(u: int, v: int) -> Edge:
    """Normalize an unordered pair to (min, max)."""
    if u == v:
        raise DomainError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """A finite simple undirected graph.

    ``parts`` holds the summand sizes when the graph was built by disjoint
    union (a single entry otherwise), so callers can map ids back to summands.
    Labels and parts are metadata and do not take part in equality.
    """

    n: int
    adjacency: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)
    parts: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidSizeError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise DomainError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise DomainError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise DomainError(f"adjacency is not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError("labels must have one entry per vertex")
        if not self.parts:
            object.__setattr__(self, "parts", (self.n,) if self.n else ())
        elif sum(self.parts) != self.n:
            raise DomainError("part sizes must add up to the vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        labels: Optional[Sequence[str]] = None,
        parts: tuple[int, ...] = (),
    ) -> "Graph":
        """Build a graph from an edge iterable; duplicates are merged."""
        if n < 0:
            raise InvalidSizeError(f"negative vertex count {n}")
        rows = [0] * n
        for u, v in edges:
            a, b = edge_key(u, v)
            if b >= n or a < 0:
                raise DomainError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(
            n=n,
            adjacency=tuple(rows),
            labels=tuple(labels) if labels is not None else None,
            parts=parts,
        )

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "Graph":
        """Build a graph from a symmetric 0/1 matrix."""
        rows, cols = np.nonzero(np.triu(np.asarray(matrix), k=1))
        return cls.from_edges(len(matrix), zip(rows.tolist(), cols.tolist()))

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    @property
    def offsets(self) -> tuple[int, ...]:
        """First vertex id of every summand."""
        starts, total = [], 0
        for size in self.parts:
            starts.append(total)
            total += size
        return tuple(starts)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degree_sequence(self) -> list[int]:
        return sorted((row.bit_count() for row in self.adjacency), reverse=True)

    def edges(self) -> EdgeList:
        return frozenset(self.iter_edges())

    def iter_edges(self) -> Iterator[Edge]:
        """Yield edges as (u, v) with u < v, sorted."""
        for u, row in enumerate(self.adjacency):
            for v in iter_bits(row >> (u + 1)):
                yield (u, u + 1 + v)

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v + 1)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph(
            n=self.n,
            adjacency=self.adjacency,
            labels=tuple(labels) if labels is not None else None,
            parts=self.parts,
        )

    def without_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with edge uv removed."""
        rows = list(self.adjacency)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(n=self.n, adjacency=tuple(rows), labels=self.labels, parts=self.parts)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adjacency))
        return Graph(n=self.n, adjacency=rows, labels=self.labels)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``, renumbered in the given order."""
        position = {v: i for i, v in enumerate(vertices)}
        edges = [
            (position[u], position[w])
            for u in vertices
            for w in iter_bits(self.adjacency[u])
            if w in position and position[u] < position[w]
        ]
        labels = [self.label(v) for v in vertices] if self.labels is not None else None
        return Graph.from_edges(len(vertices), edges, labels=labels)

    def permute(self, images: Sequence[int]) -> "Graph":
        """Relabel vertex v as images[v]."""
        return Graph.from_edges(self.n, ((images[u], images[v]) for u, v in self.iter_edges()))

    def to_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.iter_edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix


# --- Generators ---


def empty_graph(n: int) -> Graph:
    """Edgeless graph on n ≥ 0 vertices."""
    if n < 0:
        raise InvalidSizeError(f"empty_graph needs n >= 0, got {n}")
    return Graph(n=n, adjacency=(0,) * n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"path_graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSizeError(f"cycle_graph needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"complete_graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n=n, adjacency=tuple(full & ~(1 << v) for v in range(n)))


def star_graph(n: int) -> Graph:
    """Vertex 0 joined to vertices 1..n-1."""
    if n < 1:
        raise InvalidSizeError(f"star_graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi G(n, p) drawn from ``rng``."""
    if n < 0:
        raise InvalidSizeError(f"random_graph needs n >= 0, got {n}")
    draws = rng.random((n, n)) < p
    return Graph.from_matrix(np.triu(draws, k=1))


def random_connected_graph(n: int, rng: np.random.Generator, p: float = 0.3) -> Graph:
    """Random spanning tree plus G(n, p) extra edges."""
    if n < 1:
        raise InvalidSizeError(f"random_connected_graph needs n >= 1, got {n}")
    order = rng.permutation(n).tolist()
    edges = {edge_key(order[i], order[int(rng.integers(0, i))]) for i in range(1, n)}
    extra = np.triu(rng.random((n, n)) < p, k=1)
    rows, cols = np.nonzero(extra)
    edges.update(zip(rows.tolist(), cols.tolist()))
    return Graph.from_edges(n, edges)


# --- Operations ---


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G ⊕ H with the vertices of H shifted by |V(G)|."""
    shift = g.n
    rows = g.adjacency + tuple(row << shift for row in h.adjacency)
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(
            h.label(v) if h.labels is not None else str(shift + v + 1) for v in range(h.n)
        )
    parts = tuple(p for p in g.parts + h.parts if p)
    return Graph(n=g.n + h.n, adjacency=rows, labels=labels, parts=parts)


def union_all(graphs: Iterable[Graph]) -> Graph:
    """Left fold of disjoint_union."""
    result = empty_graph(0)
    for graph in graphs:
        result = disjoint_union(result, graph)
    return result


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H; vertex (a, x) gets id a·|V(H)| + x."""
    width = h.n
    rows = []
    for a in range(g.n):
        base = a * width
        for x in range(width):
            row = h.adjacency[x] << base
            for b in iter_bits(g.adjacency[a]):
                row |= 1 << (b * width + x)
            rows.append(row)
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(f"({g.label(a)},{h.label(x)})" for a in range(g.n) for x in range(width))
    return Graph(n=g.n * width, adjacency=tuple(rows), labels=labels)
