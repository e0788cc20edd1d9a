"""Maximum matchings: Hopcroft-Karp on bipartite graphs, Edmonds' blossoms otherwise."""

from collections import deque
from collections.abc import Sequence
from typing import Optional

from app.core.logging import get_logger
from app.graphs.graph import Edge, Graph

logger = get_logger(__name__)

FAKE_INFINITY = -1


class HopcroftKarp:
    """Hopcroft-Karp on a bipartite graph given as left vertex -> right neighbours.

    Vertices are scanned in increasing id order so the matching found is
    reproducible.
    """

    def __init__(self, graph_left: dict[int, list[int]]):
        self._graph_left = graph_left
        self._left = sorted(graph_left)
        self._reference_distance = FAKE_INFINITY
        self._pair_left: dict[int, int] = {}
        self._pair_right: dict[int, int] = {}
        self._dist_left: dict[int, int] = {}

    def maximum_matching(self) -> dict[int, int]:
        """Return a maximum matching as a left -> right dict."""
        self._pair_left.clear()
        self._pair_right.clear()
        while self._bfs():
            for left in self._left:
                if left not in self._pair_left:
                    self._dfs(left)
        return dict(self._pair_left)

    def _bfs(self) -> bool:
        queue: deque[int] = deque()
        for left in self._left:
            if left not in self._pair_left:
                queue.append(left)
                self._dist_left[left] = 0
            else:
                self._dist_left[left] = FAKE_INFINITY
        self._reference_distance = FAKE_INFINITY
        while queue:
            left = queue.popleft()
            if self._reference_distance != FAKE_INFINITY and (
                self._dist_left[left] >= self._reference_distance
            ):
                continue
            for right in self._graph_left[left]:
                other = self._pair_right.get(right)
                if other is None:
                    if self._reference_distance == FAKE_INFINITY:
                        self._reference_distance = self._dist_left[left] + 1
                elif self._dist_left[other] == FAKE_INFINITY:
                    self._dist_left[other] = self._dist_left[left] + 1
                    queue.append(other)
        return self._reference_distance != FAKE_INFINITY

    def _dfs(self, left: int) -> bool:
        for right in self._graph_left[left]:
            other = self._pair_right.get(right)
            if other is None:
                if self._reference_distance == self._dist_left[left] + 1:
                    self._pair_left[left] = right
                    self._pair_right[right] = left
                    return True
            elif self._dist_left[other] == self._dist_left[left] + 1 and self._dfs(other):
                self._pair_left[left] = right
                self._pair_right[right] = left
                return True
        self._dist_left[left] = FAKE_INFINITY
        return False


def bipartite_matching(graph: Graph, sides: Sequence[int]) -> list[Edge]:
    """Maximum matching of a bipartite graph; ``sides[v]`` is 0 or 1."""
    graph_left = {v: graph.neighbors(v) for v in range(graph.n) if sides[v] == 0}
    pairs = HopcroftKarp(graph_left).maximum_matching()
    return sorted((min(u, v), max(u, v)) for u, v in pairs.items())


class _Blossom:
    """Edmonds' augmenting-path search with blossom contraction."""

    def __init__(self, graph: Graph):
        self.n = graph.n
        self.neighbors = [graph.neighbors(v) for v in range(graph.n)]
        self.match = [-1] * self.n
        self.parent = [-1] * self.n
        self.base = list(range(self.n))
        self.used = [False] * self.n
        self.blossom = [False] * self.n

    def solve(self) -> list[int]:
        for v in range(self.n):
            if self.match[v] == -1:
                for u in self.neighbors[v]:
                    if self.match[u] == -1:
                        self.match[u], self.match[v] = v, u
                        break
        for root in range(self.n):
            if self.match[root] != -1:
                continue
            end = self._find_path(root)
            while end != -1:
                previous = self.parent[end]
                following = self.match[previous]
                self.match[end], self.match[previous] = previous, end
                end = following
        return self.match

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.match[a] == -1:
                break
            a = self.parent[self.match[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.match[b]]

    def _mark_path(self, v: int, stem: int, child: int) -> None:
        while self.base[v] != stem:
            self.blossom[self.base[v]] = self.blossom[self.base[self.match[v]]] = True
            self.parent[v] = child
            child = self.match[v]
            v = self.parent[self.match[v]]

    def _find_path(self, root: int) -> int:
        self.used = [False] * self.n
        self.parent = [-1] * self.n
        self.base = list(range(self.n))
        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self.neighbors[v]:
                if self.base[v] == self.base[to] or self.match[v] == to:
                    continue
                if to == root or (self.match[to] != -1 and self.parent[self.match[to]] != -1):
                    stem = self._lca(v, to)
                    self.blossom = [False] * self.n
                    self._mark_path(v, stem, to)
                    self._mark_path(to, stem, v)
                    for i in range(self.n):
                        if self.blossom[self.base[i]]:
                            self.base[i] = stem
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.match[to] == -1:
                        return to
                    self.used[self.match[to]] = True
                    queue.append(self.match[to])
        return -1


def general_matching(graph: Graph) -> list[Edge]:
    """Maximum matching of an arbitrary graph."""
    match = _Blossom(graph).solve()
    return [(v, u) for v, u in enumerate(match) if u > v]


def maximum_matching(graph: Graph, sides: Optional[Sequence[int]] = None) -> list[Edge]:
    """Maximum matching; pass a 2-coloring as ``sides`` to use Hopcroft-Karp."""
    edges = bipartite_matching(graph, sides) if sides is not None else general_matching(graph)
    logger.debug(
        "matching_solved", vertices=graph.n, size=len(edges), bipartite=sides is not None
    )
    return edges
