"""Brute-force oracles for small graphs.

These enumerate everything and share no code with the solvers they check.
"""

from itertools import permutations
from typing import Optional

from app.core.config import settings
from app.core.errors import ResourceError
from app.graphs.graph import Graph

_SUBSET_CAP = 20
_PERMUTATION_CAP = 8


def _require(name: str, graph: Graph, cap: int) -> None:
    if graph.n > cap:
        raise ResourceError(name, graph.n, cap)


def _is_independent(graph: Graph, mask: int) -> bool:
    return all(not (graph.adjacency[v] & mask) for v in range(graph.n) if mask >> v & 1)


def _is_clique(graph: Graph, mask: int) -> bool:
    return all(
        (graph.adjacency[v] | 1 << v) & mask == mask for v in range(graph.n) if mask >> v & 1
    )


def exhaustive_independence_number(graph: Graph) -> int:
    _require("exhaustive_independence_number", graph, _SUBSET_CAP)
    return max(
        (mask.bit_count() for mask in range(1 << graph.n) if _is_independent(graph, mask)),
        default=0,
    )


def exhaustive_clique_number(graph: Graph) -> int:
    _require("exhaustive_clique_number", graph, _SUBSET_CAP)
    return max(
        (mask.bit_count() for mask in range(1 << graph.n) if _is_clique(graph, mask)),
        default=0,
    )


def exhaustive_chromatic_number(graph: Graph) -> int:
    """Smallest k admitting a proper k-coloring, by plain backtracking in id order."""
    _require("exhaustive_chromatic_number", graph, _SUBSET_CAP)
    if graph.n == 0:
        return 0
    for k in range(1, graph.n + 1):
        if _colorable(graph, k, [-1] * graph.n, 0):
            return k
    return graph.n


def _colorable(graph: Graph, k: int, colors: list[int], v: int) -> bool:
    if v == graph.n:
        return True
    for c in range(k):
        if all(colors[u] != c for u in range(v) if graph.adjacency[v] >> u & 1):
            colors[v] = c
            if _colorable(graph, k, colors, v + 1):
                return True
    colors[v] = -1
    return False


def exhaustive_matching_number(graph: Graph, cap: Optional[int] = None) -> int:
    """Maximum matching by trying every partner of the lowest free vertex."""
    cap = cap or settings.exhaustive_matching_cap
    _require("exhaustive_matching_number", graph, cap)

    def best(free: int) -> int:
        if not free:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        result = best(rest)
        partners = graph.adjacency[v] & rest
        while partners:
            u = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            result = max(result, 1 + best(rest & ~(1 << u)))
        return result

    return best((1 << graph.n) - 1)


def exhaustive_automorphism_count(graph: Graph) -> int:
    """Count edge-set preserving permutations."""
    _require("exhaustive_automorphism_count", graph, _PERMUTATION_CAP)
    edges = graph.edges()
    total = 0
    for images in permutations(range(graph.n)):
        if all(
            (min(images[u], images[v]), max(images[u], images[v])) in edges for u, v in edges
        ):
            total += 1
    return total

