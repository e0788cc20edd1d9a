"""Summand constructions for token graphs of disjoint unions.

Every right-hand side is built from its summands (smaller token graphs and
Cartesian products), then each vertex is relabelled with the subset of the
union's vertex set it stands for: a product vertex ({u, v}, w) becomes
{u, v, w}. Equality with the directly built token graph is then checked as
identity of labelled edge sets.
"""

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Optional

from app.core.errors import ArityError, DomainError, StructuralError
from app.core.logging import get_logger
from app.graphs.graph import Graph, cartesian_product, empty_graph, union_all
from app.graphs.invariants import connected_components
from app.graphs.tokens import TokenGraph, TokenVertex, token_graph
from app.models.schemas import DecompositionReport

logger = get_logger(__name__)

TokenEdge = tuple[TokenVertex, TokenVertex]


class PartClass(str, Enum):
    """Classes of 3-subsets of V(G ⊕ H) by how many tokens sit in each summand."""

    W1 = "W1"  # all three in G
    W2 = "W2"  # all three in H
    W3 = "W3"  # one in G, two in H
    W4 = "W4"  # two in G, one in H

    @classmethod
    def of(cls, vertex: TokenVertex, split: int) -> "PartClass":
        in_g = sum(1 for m in vertex.members if m < split)
        return {3: cls.W1, 0: cls.W2, 1: cls.W3, 2: cls.W4}[in_g]


def part_signature(vertex: TokenVertex, offsets: Sequence[int]) -> tuple[int, ...]:
    """How many members of ``vertex`` fall in each summand."""
    counts = [0] * len(offsets)
    for m in vertex.members:
        index = max(i for i, start in enumerate(offsets) if start <= m)
        counts[index] += 1
    return tuple(counts)


def class_tag(vertex: TokenVertex, offsets: Sequence[int]) -> str:
    """W1..W4 for two summands; otherwise the summand index of every token, e.g. ``G1G1G3``."""
    if len(offsets) == 2 and vertex.k == 3:
        return PartClass.of(vertex, offsets[1]).value
    signature = part_signature(vertex, offsets)
    return "".join(f"G{i + 1}" * count for i, count in enumerate(signature))


@dataclass(frozen=True, slots=True)
class TokenLabeledGraph:
    """A graph whose vertices are identified with subsets of a union's vertex set."""

    graph: Graph
    tokens: tuple[TokenVertex, ...]
    summands: tuple[str, ...] = ()

    def edge_set(self) -> set[TokenEdge]:
        return {_token_edge(self.tokens[u], self.tokens[v]) for u, v in self.graph.iter_edges()}


def _token_edge(a: TokenVertex, b: TokenVertex) -> TokenEdge:
    return (a, b) if a < b else (b, a)


def _edge_name(edge: TokenEdge) -> str:
    return f"{edge[0]}-{edge[1]}"


def _offsets(graphs: Sequence[Graph]) -> list[int]:
    starts, total = [], 0
    for g in graphs:
        starts.append(total)
        total += g.n
    return starts


def _shift(vertex: TokenVertex, offset: int) -> list[int]:
    return [m + offset for m in vertex.members]


# --- Summands ---


@dataclass(frozen=True, slots=True)
class _Summand:
    name: str
    graph: Graph
    tokens: list[TokenVertex]


def _token_summand(name: str, g: Graph, k: int, offset: int) -> Optional[_Summand]:
    if g.n < k:
        return None
    built = token_graph(g, k)
    tokens = [TokenVertex(tuple(_shift(v, offset))) for v in built.vertices]
    return _Summand(name, built.graph, tokens)


def _token_product_summand(
    name: str, g: Graph, k: int, g_offset: int, h: Graph, h_offset: int
) -> Optional[_Summand]:
    """Γ_k(g) □ h with ({u..}, w) identified as {u.., w}."""
    if g.n < k or h.n == 0:
        return None
    built = token_graph(g, k)
    product = cartesian_product(built.graph, h)
    tokens = [
        TokenVertex.of(_shift(subset, g_offset) + [w + h_offset])
        for subset in built.vertices
        for w in range(h.n)
    ]
    return _Summand(name, product, tokens)


def _triple_product_summand(
    name: str, graphs: Sequence[Graph], offsets: Sequence[int]
) -> Optional[_Summand]:
    """G_i □ G_j □ G_k with (u, v, w) identified as {u, v, w}."""
    if any(g.n == 0 for g in graphs):
        return None
    first, second, third = graphs
    product = cartesian_product(cartesian_product(first, second), third)
    tokens = [
        TokenVertex.of((u + offsets[0], v + offsets[1], w + offsets[2]))
        for u in range(first.n)
        for v in range(second.n)
        for w in range(third.n)
    ]
    return _Summand(name, product, tokens)


def _pair_product_summand(
    name: str, g: Graph, g_offset: int, h: Graph, h_offset: int
) -> Optional[_Summand]:
    if g.n == 0 or h.n == 0:
        return None
    product = cartesian_product(g, h)
    tokens = [
        TokenVertex((u + g_offset, w + h_offset)) for u in range(g.n) for w in range(h.n)
    ]
    return _Summand(name, product, tokens)


def _assemble(summands: Sequence[Optional[_Summand]]) -> TokenLabeledGraph:
    present = [s for s in summands if s is not None]
    graph = union_all(s.graph for s in present) if present else empty_graph(0)
    tokens = tuple(t for s in present for t in s.tokens)
    graph = graph.with_labels([str(t) for t in tokens])
    return TokenLabeledGraph(graph=graph, tokens=tokens, summands=tuple(s.name for s in present))


# --- Right-hand sides ---


def rhs_theorem2(g: Graph, h: Graph) -> TokenLabeledGraph:
    """Γ3(G) ⊕ Γ3(H) ⊕ (Γ2(G) □ H) ⊕ (Γ2(H) □ G), labelled by 3-subsets of V(G ⊕ H).

    H's vertices are numbered after G's, so a vertex ({b_j, b_k}, a_i) of
    Γ2(H) □ G is the subset {a_i, b_j, b_k}.
    """
    shift = g.n
    return _assemble(
        [
            _token_summand("T3(G)", g, 3, 0),
            _token_summand("T3(H)", h, 3, shift),
            _token_product_summand("T2(G)xH", g, 2, 0, h, shift),
            _token_product_summand("T2(H)xG", h, 2, shift, g, 0),
        ]
    )


def rhs_2token_union(graphs: Sequence[Graph]) -> TokenLabeledGraph:
    """⊕ Γ2(G_i) ⊕ ⊕_{i<j} (G_i □ G_j), labelled by 2-subsets of the union."""
    offsets = _offsets(graphs)
    summands: list[Optional[_Summand]] = [
        _token_summand(f"T2(G{i + 1})", g, 2, offsets[i]) for i, g in enumerate(graphs)
    ]
    for i, j in combinations(range(len(graphs)), 2):
        summands.append(
            _pair_product_summand(
                f"G{i + 1}xG{j + 1}", graphs[i], offsets[i], graphs[j], offsets[j]
            )
        )
    return _assemble(summands)


def rhs_theorem3(graphs: Sequence[Graph]) -> TokenLabeledGraph:
    """⊕ Γ3(G_i) ⊕ ⊕_{i≠j} (Γ2(G_i) □ G_j) ⊕ ⊕_{i<j<k} (G_i □ G_j □ G_k)."""
    if len(graphs) < 2:
        raise ArityError(f"need at least 2 graphs, got {len(graphs)}")
    offsets = _offsets(graphs)
    count = len(graphs)
    summands: list[Optional[_Summand]] = [
        _token_summand(f"T3(G{i + 1})", g, 3, offsets[i]) for i, g in enumerate(graphs)
    ]
    for i in range(count):
        for j in range(count):
            if i != j:
                summands.append(
                    _token_product_summand(
                        f"T2(G{i + 1})xG{j + 1}", graphs[i], 2, offsets[i], graphs[j], offsets[j]
                    )
                )
    for i, j, k in combinations(range(count), 3):
        summands.append(
            _triple_product_summand(
                f"G{i + 1}xG{j + 1}xG{k + 1}",
                (graphs[i], graphs[j], graphs[k]),
                (offsets[i], offsets[j], offsets[k]),
            )
        )
    return _assemble(summands)


# --- Verification ---


def verify_decomposition(
    lhs: TokenGraph, rhs: TokenLabeledGraph, instance: str = ""
) -> DecompositionReport:
    """Compare the direct token graph with a relabelled summand construction.

    Checks identical vertex labels, identical edge sets, and that the direct
    construction has no edge between differently tagged classes.
    """
    lhs_labels = set(lhs.vertices)
    rhs_labels = set(rhs.tokens)
    if len(rhs_labels) != len(rhs.tokens):
        repeated = min(t for t, c in Counter(rhs.tokens).items() if c > 1)
        raise StructuralError("right-hand side repeats a vertex label", str(repeated))
    if lhs_labels != rhs_labels:
        first = min(lhs_labels.symmetric_difference(rhs_labels))
        raise StructuralError("vertex label sets differ", str(first))

    offsets = lhs.base.offsets or (0,)
    tags = {v: class_tag(v, offsets) for v in lhs.vertices}
    lhs_edges = {
        _token_edge(lhs.vertices[u], lhs.vertices[v]) for u, v in lhs.graph.iter_edges()
    }
    rhs_edges = rhs.edge_set()

    cross = sorted(e for e in lhs_edges if tags[e[0]] != tags[e[1]])
    missing = sorted(lhs_edges - rhs_edges)
    extra = sorted(rhs_edges - lhs_edges)

    class_vertices = dict(sorted(Counter(tags.values()).items()))
    class_edges_equal = {}
    for tag in class_vertices:
        inside_lhs = {e for e in lhs_edges if tags[e[0]] == tag and tags[e[1]] == tag}
        inside_rhs = {e for e in rhs_edges if tags[e[0]] == tag and tags[e[1]] == tag}
        class_edges_equal[tag] = inside_lhs == inside_rhs

    verdict = (
        lhs.graph.n == rhs.graph.n
        and len(lhs_edges) == len(rhs_edges)
        and not cross
        and not missing
        and not extra
        and all(class_edges_equal.values())
    )
    report = DecompositionReport(
        instance=instance,
        lhs_vertices=lhs.graph.n,
        lhs_edges=len(lhs_edges),
        rhs_vertices=rhs.graph.n,
        rhs_edges=len(rhs_edges),
        class_vertices=class_vertices,
        class_edges_equal=class_edges_equal,
        cross_class_edges=[_edge_name(e) for e in cross],
        missing_edges=[_edge_name(e) for e in missing],
        extra_edges=[_edge_name(e) for e in extra],
        verdict=verdict,
    )
    logger.debug(
        "decomposition_verified",
        instance=instance,
        vertices=lhs.graph.n,
        missing=len(missing),
        extra=len(extra),
        verdict=verdict,
    )
    return report


def corrupt(rhs: TokenLabeledGraph) -> TokenLabeledGraph:
    """Drop the first edge of ``rhs``; used by the self-test."""
    edges = list(rhs.graph.iter_edges())
    if not edges:
        return rhs
    u, v = edges[0]
    return TokenLabeledGraph(
        graph=rhs.graph.without_edge(u, v), tokens=rhs.tokens, summands=rhs.summands
    )


# --- Components ---


def components_formula(n: int) -> int:
    """n² + C(n, 3): components of Γ3 of n connected graphs with ≥ 3 vertices each."""
    if n < 2:
        raise DomainError(f"components_formula needs n >= 2, got {n}")
    return n * n + comb(n, 3)


@dataclass(frozen=True, slots=True)
class ComponentCensus:
    graphs: int
    components: int
    predicted: int
    hypothesis_holds: bool

    @property
    def agrees(self) -> bool:
        return self.components == self.predicted


def component_census(graphs: Sequence[Graph]) -> ComponentCensus:
    """Count components of Γ3(⊕G_i) next to the formula's prediction.

    The formula's hypothesis is that every G_i is connected with at least
    three vertices; callers should only assert agreement when it holds.
    """
    if len(graphs) < 2:
        raise ArityError(f"need at least 2 graphs, got {len(graphs)}")
    union = union_all(graphs)
    built = token_graph(union, 3)
    hypothesis = all(g.n >= 3 and len(connected_components(g)) == 1 for g in graphs)
    return ComponentCensus(
        graphs=len(graphs),
        components=len(connected_components(built.graph)),
        predicted=components_formula(len(graphs)),
        hypothesis_holds=hypothesis,
    )
