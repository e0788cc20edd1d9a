"""Exact invariants: components, distances, bipartiteness, χ, ω, α, α′.

All solvers work on the bit-packed adjacency rows of ``Graph``. Ties are
broken by the lowest vertex id, so every witness is reproducible.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from app.core.config import settings
from app.core.errors import DomainError, ResourceError, SolverConsistencyError
from app.core.logging import get_logger
from app.graphs.graph import Edge, Graph, iter_bits
from app.graphs.matching import HopcroftKarp, maximum_matching
from app.models.schemas import INFINITE, InvariantReport

logger = get_logger(__name__)


def _require_vertices(graph: Graph, operation: str) -> None:
    if graph.n == 0:
        raise DomainError(f"{operation} is undefined on the empty graph")


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# --- Reachability ---


def connected_components(graph: Graph) -> list[list[int]]:
    """Vertex sets of the components, ordered by their smallest vertex."""
    components = []
    unseen = (1 << graph.n) - 1
    while unseen:
        frontier = 1 << _low_bit(unseen)
        reached = frontier
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= graph.adjacency[v]
            frontier = grown & ~reached
            reached |= frontier
        components.append(list(iter_bits(reached)))
        unseen &= ~reached
    return components


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in iter_bits(graph.adjacency[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def all_pairs_distances(graph: Graph) -> np.ndarray:
    """n × n matrix of BFS distances, -1 where no path exists."""
    return np.array([bfs_distances(graph, v) for v in range(graph.n)], dtype=np.int64).reshape(
        graph.n, graph.n
    )


def diameter(graph: Graph) -> Union[int, float]:
    """Longest shortest path; ``math.inf`` for disconnected graphs."""
    _require_vertices(graph, "diameter")
    distances = all_pairs_distances(graph)
    if (distances < 0).any():
        return math.inf
    return int(distances.max())


# --- Bipartiteness ---


@dataclass(frozen=True, slots=True)
class BipartiteResult:
    """A proper 2-coloring, or an odd cycle proving none exists."""

    bipartite: bool
    coloring: Optional[tuple[int, ...]] = None
    odd_cycle: Optional[tuple[int, ...]] = None


def is_bipartite(graph: Graph) -> BipartiteResult:
    color = [-1] * graph.n
    parent = [-1] * graph.n
    depth = [0] * graph.n
    for root in range(graph.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(graph.adjacency[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(v, u, parent, depth))
    return BipartiteResult(True, coloring=tuple(color))


def _odd_cycle(v: int, u: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    """Close the BFS-tree paths of the monochromatic edge vu into a cycle."""
    left, right = [v], [u]
    a, b = v, u
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return tuple(left + right[-2::-1])


# --- Triangles and cliques ---


def find_triangle(graph: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically first triangle, if any."""
    for u, v in graph.iter_edges():
        common = graph.adjacency[u] & graph.adjacency[v] & ~((1 << (v + 1)) - 1)
        if common:
            return (u, v, _low_bit(common))
    return None


def triangle_free(graph: Graph) -> bool:
    return find_triangle(graph) is None


def triangle_count(graph: Graph) -> int:
    total = 0
    for u, v in graph.iter_edges():
        total += (graph.adjacency[u] & graph.adjacency[v]).bit_count()
    return total // 3


def _color_classes(adjacency: tuple[int, ...], candidates: int) -> tuple[list[int], list[int]]:
    """Greedy coloring of ``candidates``; vertices come out grouped by color."""
    order: list[int] = []
    bounds: list[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = _low_bit(available)
            available &= ~adjacency[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def maximum_clique(graph: Graph) -> list[int]:
    """Exact maximum clique by branch and bound with a coloring bound."""
    _require_vertices(graph, "clique_number")
    adjacency = graph.adjacency
    best: list[int] = []

    def expand(clique: list[int], candidates: int) -> None:
        nonlocal best
        order, bounds = _color_classes(adjacency, candidates)
        for index in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[index] <= len(best):
                return
            v = order[index]
            clique.append(v)
            remaining = candidates & adjacency[v]
            if remaining:
                expand(clique, remaining)
            elif len(clique) > len(best):
                best = sorted(clique)
            clique.pop()
            candidates &= ~(1 << v)

    expand([], (1 << graph.n) - 1)
    logger.debug("clique_solved", vertices=graph.n, omega=len(best))
    return best


def clique_number(graph: Graph) -> int:
    return len(maximum_clique(graph))


# --- Coloring ---


def dsatur_coloring(graph: Graph) -> list[int]:
    """Greedy DSATUR: highest saturation, then degree, then lowest id."""
    color = [-1] * graph.n
    saturation = [0] * graph.n  # bitmask of neighbour colors
    for _ in range(graph.n):
        v = max(
            (u for u in range(graph.n) if color[u] < 0),
            key=lambda u: (saturation[u].bit_count(), graph.degree(u), -u),
        )
        c = _low_bit(~saturation[v])
        color[v] = c
        for u in iter_bits(graph.adjacency[v]):
            saturation[u] |= 1 << c
    return color


def find_k_coloring(graph: Graph, k: int, ordering: list[int]) -> Optional[list[int]]:
    """Backtracking k-coloring along ``ordering``; a new color is opened only in sequence."""
    if k <= 0:
        raise DomainError("k should be greater than 0")
    coloring = [-1] * graph.n

    def extend(position: int, used: int) -> bool:
        if position == graph.n:
            return True
        v = ordering[position]
        forbidden = 0
        for u in iter_bits(graph.adjacency[v]):
            if coloring[u] >= 0:
                forbidden |= 1 << coloring[u]
        for c in range(min(used + 1, k)):
            if forbidden >> c & 1:
                continue
            coloring[v] = c
            if extend(position + 1, max(used, c + 1)):
                return True
        coloring[v] = -1
        return False

    return coloring if extend(0, 0) else None


def minimum_coloring(graph: Graph, bipartite: Optional[BipartiteResult] = None) -> list[int]:
    """A proper coloring with χ(G) colors."""
    _require_vertices(graph, "chromatic_number")
    if graph.num_edges == 0:
        return [0] * graph.n
    bipartite = bipartite or is_bipartite(graph)
    if bipartite.bipartite and bipartite.coloring is not None:
        return list(bipartite.coloring)
    upper = dsatur_coloring(graph)
    lower = clique_number(graph)
    ordering = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    for k in range(lower, max(upper) + 1):
        found = find_k_coloring(graph, k, ordering)
        if found is not None:
            return found
    return upper


def chromatic_number(graph: Graph) -> int:
    return max(minimum_coloring(graph)) + 1


def is_proper_coloring(graph: Graph, coloring: list[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in graph.iter_edges())


# --- Matchings and independent sets ---


def matching_number(graph: Graph) -> int:
    return len(maximum_matching_witness(graph))


def maximum_matching_witness(graph: Graph) -> list[Edge]:
    result = is_bipartite(graph)
    return maximum_matching(graph, result.coloring if result.bipartite else None)


def _konig_independent_set(graph: Graph, sides: tuple[int, ...]) -> list[int]:
    """Complement of the König vertex cover built from a maximum matching."""
    left = {v: graph.neighbors(v) for v in range(graph.n) if sides[v] == 0}
    pair_left = HopcroftKarp(left).maximum_matching()
    pair_right = {r: l for l, r in pair_left.items()}
    reached = set()
    queue = deque(v for v in left if v not in pair_left)
    reached.update(queue)
    while queue:
        v = queue.popleft()
        for r in left[v]:
            if r in reached:
                continue
            reached.add(r)
            partner = pair_right.get(r)
            if partner is not None and partner not in reached:
                reached.add(partner)
                queue.append(partner)
    return [
        v for v in range(graph.n) if (sides[v] == 0) == (v in reached)
    ]


def maximum_independent_set(graph: Graph, use_konig: bool = True) -> list[int]:
    """Exact maximum independent set; König on bipartite inputs, else a complement clique."""
    _require_vertices(graph, "independence_number")
    if use_konig:
        result = is_bipartite(graph)
        if result.bipartite and result.coloring is not None:
            return _konig_independent_set(graph, result.coloring)
    return maximum_clique(graph.complement())


def independence_number(graph: Graph, use_konig: bool = True) -> int:
    return len(maximum_independent_set(graph, use_konig))


def count_maximum_independent_sets(graph: Graph) -> int:
    """Number of independent sets of size α(G).

    Branches on the lowest candidate; the remainder is bounded by König's
    theorem when the graph is bipartite and by a greedy clique cover otherwise.
    """
    alpha = independence_number(graph)
    bip = is_bipartite(graph)
    sides = bip.coloring if bip.bipartite else None
    adjacency = graph.adjacency

    def bound(candidates: int) -> int:
        if sides is not None:
            left = {
                v: [u for u in iter_bits(adjacency[v] & candidates)]
                for v in iter_bits(candidates)
                if sides[v] == 0
            }
            return candidates.bit_count() - len(HopcroftKarp(left).maximum_matching())
        cover = 0
        rest = candidates
        while rest:
            v = _low_bit(rest)
            clique = 1 << v
            pool = rest & adjacency[v]
            while pool:
                u = _low_bit(pool)
                clique |= 1 << u
                pool &= adjacency[u]
            rest &= ~clique
            cover += 1
        return cover

    def count(size: int, candidates: int) -> int:
        if size == alpha:
            return 1
        if not candidates or size + bound(candidates) < alpha:
            return 0
        v = _low_bit(candidates)
        rest = candidates & ~(1 << v)
        return count(size + 1, rest & ~adjacency[v]) + count(size, rest)

    total = count(0, (1 << graph.n) - 1)
    logger.debug("independent_sets_counted", vertices=graph.n, alpha=alpha, count=total)
    return total


# --- Report ---


def full_report(
    graph: Graph,
    vertex_budget: Optional[int] = None,
    np_hard_budget: Optional[int] = None,
) -> InvariantReport:
    """Compute every invariant and check them against each other.

    1. Enforce the vertex budget, and the NP-hard budget for non-bipartite inputs
    2. Components and diameter by BFS
    3. χ, ω, α, α′ (bipartite shortcuts where they apply)
    4. Cross-field consistency
    """
    _require_vertices(graph, "full_report")
    vertex_budget = vertex_budget or settings.vertex_budget
    np_hard_budget = np_hard_budget or settings.np_hard_budget
    if graph.n > vertex_budget:
        raise ResourceError("full_report", graph.n, vertex_budget)

    bip = is_bipartite(graph)
    if not bip.bipartite and graph.n > np_hard_budget:
        raise ResourceError("chromatic_number", graph.n, np_hard_budget)

    components = len(connected_components(graph))
    diam = diameter(graph)
    chi = max(minimum_coloring(graph, bip)) + 1
    omega = clique_number(graph)
    alpha = independence_number(graph)
    matching = maximum_matching(graph, bip.coloring if bip.bipartite else None)
    report = InvariantReport(
        vertices=graph.n,
        edges=graph.num_edges,
        components=components,
        diameter=INFINITE if diam == math.inf else int(diam),
        chi=chi,
        omega=omega,
        alpha=alpha,
        alpha_prime=len(matching),
        triangle_free=triangle_free(graph),
        bipartite=bip.bipartite,
    )
    _check_consistency(report)
    logger.debug("invariants_computed", vertices=graph.n, chi=chi, omega=omega, alpha=alpha)
    return report


def _check_consistency(report: InvariantReport) -> None:
    problems = []
    if report.omega > report.chi:
        problems.append("omega exceeds chi")
    if report.alpha * report.chi < report.vertices:
        problems.append("alpha below |V|/chi")
    if report.alpha_prime > report.vertices // 2:
        problems.append("alpha_prime exceeds |V|/2")
    if report.triangle_free and report.omega > 2:
        problems.append("triangle-free graph with omega > 2")
    if report.bipartite and report.alpha + report.alpha_prime != report.vertices:
        problems.append("König equality fails")
    if report.bipartite != (report.chi <= 2):
        problems.append("bipartiteness disagrees with chi")
    if problems:
        raise SolverConsistencyError("; ".join(problems))
