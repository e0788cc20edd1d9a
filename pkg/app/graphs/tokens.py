"""k-token graphs Γ_k(G).

Vertices of Γ_k(G) are the k-subsets of V(G); A ~ B iff A △ B = {x, y} with
xy ∈ E(G). Subsets are indexed by colexicographic rank.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import comb

from app.core.errors import DomainError, InvalidKError, TokenIndexError
from app.core.logging import get_logger
from app.graphs.graph import Graph, iter_bits

logger = get_logger(__name__)


@dataclass(frozen=True, order=True, slots=True)
class TokenVertex:
    """A strictly increasing tuple of base-vertex ids (0-based)."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise DomainError(f"token members must be strictly increasing: {self.members}")
        if self.members and self.members[0] < 0:
            raise DomainError(f"negative token member in {self.members}")

    @classmethod
    def of(cls, members: Iterable[int]) -> "TokenVertex":
        """Normalize any iterable of distinct ids."""
        items = list(members)
        ordered = tuple(sorted(items))
        if len(set(ordered)) != len(items):
            raise DomainError(f"repeated token member in {items}")
        return cls(ordered)

    @property
    def k(self) -> int:
        return len(self.members)

    def symmetric_difference(self, other: "TokenVertex") -> frozenset[int]:
        return frozenset(self.members).symmetric_difference(other.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(m + 1) for m in self.members) + "}"


def rank_subset(members: Sequence[int] | TokenVertex) -> int:
    """Colex rank of a strictly increasing subset."""
    if isinstance(members, TokenVertex):
        members = members.members
    previous = -1
    rank = 0
    for position, member in enumerate(members):
        if member <= previous:
            raise TokenIndexError(f"subset {tuple(members)} is not strictly increasing")
        rank += comb(member, position + 1)
        previous = member
    return rank


def unrank(rank: int, n: int, k: int) -> TokenVertex:
    """k-subset of {0..n-1} with colex rank ``rank``."""
    if k < 0 or k > n or not 0 <= rank < comb(n, k):
        raise TokenIndexError(f"rank {rank} outside 0..C({n},{k})-1")
    members = [0] * k
    while k > 0:
        n -= 1
        offset = comb(n, k)
        if rank >= offset:
            rank -= offset
            k -= 1
            members[k] = n
    return TokenVertex(tuple(members))


@dataclass(frozen=True, slots=True)
class TokenGraph:
    """Γ_k(base) with its colex vertex index."""

    base: Graph
    k: int
    graph: Graph
    vertices: tuple[TokenVertex, ...]

    def index_of(self, vertex: TokenVertex) -> int:
        if vertex.k != self.k or (vertex.members and vertex.members[-1] >= self.base.n):
            raise TokenIndexError(f"{vertex} is not a vertex of this token graph")
        return rank_subset(vertex)

    def vertex(self, index: int) -> TokenVertex:
        return self.vertices[index]


def token_graph(base: Graph, k: int) -> TokenGraph:
    """Build Γ_k(base) by swapping one member for a base neighbour."""
    n = base.n
    if k < 1 or k > n:
        raise InvalidKError(f"k must satisfy 1 <= k <= {n}, got {k}")
    size = comb(n, k)
    vertices = tuple(unrank(r, n, k) for r in range(size))
    rows = [0] * size
    for a, subset in enumerate(vertices):
        members = subset.members
        mask = sum(1 << m for m in members)
        for x in members:
            for y in iter_bits(base.adjacency[x] & ~mask):
                b = rank_subset(sorted([m for m in members if m != x] + [y]))
                rows[a] |= 1 << b
    graph = Graph(n=size, adjacency=tuple(rows), labels=tuple(str(v) for v in vertices))
    logger.debug("token_graph_built", base_vertices=n, k=k, vertices=size, edges=graph.num_edges)
    return TokenGraph(base=base, k=k, graph=graph, vertices=vertices)


def complement_permutation(n: int, k: int) -> list[int]:
    """Ids of V∖A in Γ_{n-k} for every A in Γ_k, indexed by the colex rank of A."""
    if k < 0 or k > n:
        raise InvalidKError(f"k must satisfy 0 <= k <= {n}, got {k}")
    everything = frozenset(range(n))
    return [
        rank_subset(sorted(everything.difference(unrank(r, n, k).members)))
        for r in range(comb(n, k))
    ]
