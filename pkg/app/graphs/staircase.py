"""Cubical staircase graphs CS_n and the isomorphism ψ: Γ3(P_n) → CS_n.

CS_n has vertex set {(i,j,k): 1 ≤ i ≤ n-2, 1 ≤ j ≤ i, 1 ≤ k ≤ n-1-i}; an edge
moves exactly one coordinate by exactly one. Coordinates are enumerated in
lexicographic order and that order is the dense id order.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from app.core.errors import DomainError, InvalidSizeError
from app.core.logging import get_logger
from app.graphs.graph import Edge, Graph
from app.graphs.tokens import TokenVertex, unrank
from app.models.schemas import StaircaseInvariants

logger = get_logger(__name__)


@dataclass(frozen=True, order=True, slots=True)
class StairCoord:
    i: int
    j: int
    k: int

    def is_valid(self, n: int) -> bool:
        return 1 <= self.i <= n - 2 and 1 <= self.j <= self.i and 1 <= self.k <= n - 1 - self.i

    @property
    def parity(self) -> int:
        return (self.i + self.j + self.k) % 2

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


@dataclass(frozen=True, slots=True)
class StairGraph:
    n: int
    graph: Graph
    coords: tuple[StairCoord, ...]

    def index_of(self, coord: StairCoord) -> int:
        try:
            return _coord_index(self.n)[coord]
        except KeyError:
            raise DomainError(f"{coord} is not a vertex of CS_{self.n}") from None


@lru_cache(maxsize=64)
def _coord_index(n: int) -> dict[StairCoord, int]:
    return {c: idx for idx, c in enumerate(staircase_coords(n))}


def _require_n(n: int, minimum: int, operation: str) -> None:
    if n < minimum:
        raise InvalidSizeError(f"{operation} needs n >= {minimum}, got {n}")


def staircase_coords(n: int) -> list[StairCoord]:
    """All vertices of CS_n in lexicographic (i, j, k) order."""
    _require_n(n, 3, "staircase_coords")
    return [
        StairCoord(i, j, k)
        for i in range(1, n - 1)
        for j in range(1, i + 1)
        for k in range(1, n - i)
    ]


def staircase_graph(n: int) -> StairGraph:
    """Generate CS_n from the three edge families (k+1, i+1, j+1)."""
    _require_n(n, 3, "staircase_graph")
    coords = staircase_coords(n)
    index = _coord_index(n)
    edges: list[Edge] = []
    for c in coords:
        for step in (
            StairCoord(c.i, c.j, c.k + 1),
            StairCoord(c.i + 1, c.j, c.k),
            StairCoord(c.i, c.j + 1, c.k),
        ):
            # the printed i-family range reaches past the last k of row i+1
            if step.is_valid(n):
                edges.append((index[c], index[step]))
    graph = Graph.from_edges(len(coords), edges, labels=[str(c) for c in coords])
    logger.debug("staircase_built", n=n, vertices=graph.n, edges=graph.num_edges)
    return StairGraph(n=n, graph=graph, coords=tuple(coords))


def _require_coord(coord: StairCoord, n: int) -> None:
    if not coord.is_valid(n):
        raise DomainError(f"{coord} is not a vertex of CS_{n}")


def staircase_distance(a: StairCoord, b: StairCoord, n: int) -> int:
    """Shortest-path distance in CS_n (n ≥ 4): the L1 distance of the triples."""
    _require_n(n, 4, "staircase_distance")
    _require_coord(a, n)
    _require_coord(b, n)
    return abs(a.i - b.i) + abs(a.j - b.j) + abs(a.k - b.k)


def psi(subset: TokenVertex, n: int) -> StairCoord:
    """ψ({x_i, x_j, x_k}) = (j-1, i, n+1-k) for 1-based i < j < k.

    ``subset`` holds 0-based path vertex ids, as every TokenVertex does.
    """
    if subset.k != 3:
        raise DomainError(f"psi needs a 3-subset, got {subset}")
    i, j, k = (m + 1 for m in subset.members)
    if k > n:
        raise DomainError(f"{subset} is not a 3-subset of V(P_{n})")
    return StairCoord(j - 1, i, n + 1 - k)


def psi_of_labels(labels: Iterable[int], n: int) -> StairCoord:
    """ψ on a 1-based triple given in any order."""
    items = list(labels)
    if len(items) != 3 or len(set(items)) != 3 or min(items) < 1 or max(items) > n:
        raise DomainError(f"psi needs three distinct labels in 1..{n}, got {items}")
    return psi(TokenVertex.of(x - 1 for x in items), n)


def psi_inverse(coord: StairCoord, n: int) -> TokenVertex:
    """Inverse of ψ: (i, j, k) ↦ {j, i+1, n+1-k} (1-based)."""
    _require_coord(coord, n)
    return TokenVertex((coord.j - 1, coord.i, n - coord.k))


def psi_permutation(n: int) -> list[int]:
    """ψ as a list: Γ3(P_n) colex id ↦ CS_n id."""
    index = _coord_index(n)
    return [index[psi(unrank(r, n, 3), n)] for r in range(comb(n, 3))]


def reflection(n: int) -> list[int]:
    """The automorphism (i, j, k) ↦ (n-1-i, k, j) of CS_n as a permutation of ids."""
    _require_n(n, 3, "reflection")
    index = _coord_index(n)
    return [index[StairCoord(n - 1 - c.i, c.k, c.j)] for c in staircase_coords(n)]


def closed_form_invariants(n: int) -> StaircaseInvariants:
    _require_n(n, 3, "closed_form_invariants")
    if n % 2 == 0:
        alpha = (n**3 - 3 * n**2 + 2 * n) // 12
    else:
        alpha = (n**3 - 3 * n**2 + 5 * n - 3) // 12
    small = n == 3
    return StaircaseInvariants(
        n=n,
        chi=1 if small else 2,
        omega=1 if small else 2,
        alpha=alpha,
        diam=0 if small else 3 * (n - 3),
    )


def parity_two_coloring(sg: StairGraph) -> list[int]:
    """Color 0 for even i+j+k, 1 for odd; CS_3 gets the single color 0."""
    if sg.n == 3:
        return [0] * len(sg.coords)
    return [c.parity for c in sg.coords]


def conjectured_matching_number(n: int) -> int:
    """Closed form of the matching-number conjecture for Γ3(P_n)."""
    _require_n(n, 3, "conjectured_matching_number")
    if n % 2 == 0:
        return (n**3 - 3 * n**2 + 2 * n) // 12
    return (n**3 - 3 * n**2 - n + 3) // 12


def conjectured_matching_sum(n: int) -> int:
    """The double-sum form the conjecture's closed form is derived from."""
    _require_n(n, 3, "conjectured_matching_sum")
    half = n // 2 - 1 if n % 2 == 0 else (n - 1) // 2 - 1
    width = 1 if n % 2 == 0 else 0
    triangle = sum(range(1, half + 1))
    return sum(sum(range(1, 2 * k - width + 1)) for k in range(1, half + 1)) + triangle


def conjecture_matching_set(n: int) -> list[tuple[StairCoord, StairCoord]]:
    """The two displayed edge families of the independent edge set.

    k-family: (i,j,k)(i,j,k+1) for odd k. j-family: (i,j,k)(i,j+1,k) for odd j on
    the last k of every row the k-family leaves unmatched; that row is i = 2t for
    even n and i = 2t+1 for odd n.
    """
    _require_n(n, 4, "conjecture_matching_set")
    even = n % 2 == 0
    t_max = (n - 2) // 2 if even else (n - 3) // 2
    pairs: list[tuple[StairCoord, StairCoord]] = []
    for t in range(1, t_max + 1):
        k = 2 * t - 1
        for i in range(1, n - 1 - k):
            for j in range(1, i + 1):
                pairs.append((StairCoord(i, j, k), StairCoord(i, j, k + 1)))
    for t in range(1, t_max + 1):
        i = 2 * t if even else 2 * t + 1
        k = n - 1 - i
        for s in range(1, t + 1):
            j = 2 * s - 1
            pairs.append((StairCoord(i, j, k), StairCoord(i, j + 1, k)))
    return pairs


def matching_edges(sg: StairGraph, pairs: Iterable[tuple[StairCoord, StairCoord]]) -> list[Edge]:
    """Translate coordinate pairs to edge ids, rejecting non-edges."""
    result = []
    for a, b in pairs:
        u, v = sg.index_of(a), sg.index_of(b)
        if not sg.graph.has_edge(u, v):
            raise DomainError(f"{a}{b} is not an edge of CS_{sg.n}")
        result.append((u, v))
    return result


def is_matching(edges: Iterable[Edge], graph: Optional[Graph] = None) -> bool:
    """True iff the edges are pairwise vertex-disjoint (and edges of ``graph``)."""
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen or u == v:
            return False
        if graph is not None and not graph.has_edge(u, v):
            return False
        seen.update((u, v))
    return True
