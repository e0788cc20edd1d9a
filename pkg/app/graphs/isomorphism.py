"""Isomorphism witnesses, mapping verification and automorphism groups.

Both graphs are refined together as one disjoint union, so a color means the
same thing on either side. The search individualizes one vertex of the first
graph against each candidate of the second and refines again.
"""

import math
from collections import Counter, deque
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from app.core.config import settings
from app.core.errors import MappingError, ResourceError, SolverConsistencyError
from app.core.logging import get_logger
from app.graphs.graph import Graph, disjoint_union, iter_bits
from app.graphs.invariants import triangle_count

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class VertexMapping:
    """Total map v ↦ images[v] between two dense vertex sets."""

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "VertexMapping":
        return cls(tuple(range(n)))

    @classmethod
    def of(cls, images: Sequence[int]) -> "VertexMapping":
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def is_bijection(self) -> bool:
        return sorted(self.images) == list(range(len(self.images)))

    def inverse(self) -> "VertexMapping":
        if not self.is_bijection():
            raise MappingError("only a bijection has an inverse")
        result = [0] * len(self.images)
        for v, w in enumerate(self.images):
            result[w] = v
        return VertexMapping(tuple(result))

    def compose(self, then: "VertexMapping") -> "VertexMapping":
        """Apply ``self`` first, then ``then``."""
        return VertexMapping(tuple(then.images[w] for w in self.images))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        result = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = []
            v = start
            while not seen[v]:
                seen[v] = True
                cycle.append(v)
                v = self.images[v]
            result.append(tuple(cycle))
        return result

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.images else 1

    def to_pairs(self) -> list[list[int]]:
        """1-based [v, image] pairs."""
        return [[v + 1, w + 1] for v, w in enumerate(self.images)]


def verify_mapping(g: Graph, h: Graph, mapping: VertexMapping) -> bool:
    """True iff ``mapping`` preserves adjacency and non-adjacency."""
    if g.n != h.n or len(mapping) != g.n or not mapping.is_bijection():
        raise MappingError(f"mapping is not a bijection between {g.n} and {h.n} vertices")
    images = mapping.images
    for v, row in enumerate(g.adjacency):
        mapped = 0
        for u in iter_bits(row):
            mapped |= 1 << images[u]
        if mapped != h.adjacency[images[v]]:
            return False
    return True


# --- Refinement ---


def refine(graph: Graph, colors: Sequence[int]) -> list[int]:
    """Stable coloring: split classes by neighbour-color multisets until nothing splits.

    New colors are ranks of (old color, neighbour colors) signatures, so the
    result depends only on the colored graph and not on vertex ids.
    """
    current = list(colors)
    classes = len(set(current))
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in iter_bits(graph.adjacency[v]))))
            for v in range(graph.n)
        ]
        palette = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == classes:
            return refined
        current, classes = refined, len(palette)


class _PairSearch:
    """Individualize-refine search for isomorphisms from ``g`` onto ``h``."""

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.n = g.n
        self.union = disjoint_union(g, h)
        self.nodes = 0

    def initial(self, pinned: Sequence[tuple[int, int]] = ()) -> list[int]:
        colors = [0] * self.union.n
        for index, (v, w) in enumerate(pinned, start=1):
            colors[v] = colors[self.n + w] = index
        return colors

    def run(self, colors: list[int]) -> Optional[VertexMapping]:
        self.nodes += 1
        colors = refine(self.union, colors)
        left, right = colors[: self.n], colors[self.n:]
        counts = Counter(left)
        if counts != Counter(right):
            return None
        open_cells = [c for c, size in counts.items() if size > 1]
        if not open_cells:
            position = {c: w for w, c in enumerate(right)}
            mapping = VertexMapping(tuple(position[c] for c in left))
            return mapping if verify_mapping(self.g, self.h, mapping) else None
        target = min(open_cells, key=lambda c: (counts[c], c))
        v = left.index(target)
        fresh = max(colors) + 1
        for w, c in enumerate(right):
            if c != target:
                continue
            trial = list(colors)
            trial[v] = trial[self.n + w] = fresh
            found = self.run(trial)
            if found is not None:
                return found
        return None


def _screen(g: Graph, h: Graph) -> Optional[str]:
    """Name the first invariant on which the graphs differ."""
    if g.n != h.n:
        return "order"
    if g.num_edges != h.num_edges:
        return "size"
    if g.degree_sequence() != h.degree_sequence():
        return "degree_sequence"
    if triangle_count(g) != triangle_count(h):
        return "triangle_count"
    return None


def are_isomorphic(g: Graph, h: Graph, budget: Optional[int] = None) -> Optional[VertexMapping]:
    """A verified isomorphism g → h, or None.

    1. Screen order, size, degree sequence and triangle count
    2. Refine both graphs jointly and compare color histograms
    3. Backtrack over individualizations until the partition is discrete
    """
    budget = budget or settings.iso_budget
    size = max(g.n, h.n)
    if size > budget:
        raise ResourceError("are_isomorphic", size, budget)
    mismatch = _screen(g, h)
    if mismatch is not None:
        logger.debug("isomorphism_screened_out", invariant=mismatch)
        return None
    search = _PairSearch(g, h)
    found = search.run(search.initial())
    logger.debug(
        "isomorphism_search_done", vertices=g.n, nodes=search.nodes, found=found is not None
    )
    if found is not None and not verify_mapping(g, h, found):
        raise SolverConsistencyError("isomorphism search returned an invalid witness")
    return found


# --- Automorphisms ---


@dataclass(frozen=True, slots=True)
class AutGroupSummary:
    """Order, a generating set and (for small groups) the element orders of Aut(G)."""

    order: int
    generators: tuple[VertexMapping, ...]
    element_orders: Optional[tuple[int, ...]] = None

    def structure(self) -> str:
        """Name the group when its order and exponent pin it down."""
        if self.order == 1:
            return "Z1"
        if self.order == 2:
            return "Z2"
        if self.order == 4 and self.element_orders is not None:
            return "Z2xZ2" if max(self.element_orders) == 2 else "Z4"
        return f"order {self.order}"


def _closure(generators: Sequence[VertexMapping], n: int) -> list[VertexMapping]:
    identity = VertexMapping.identity(n)
    elements = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            product = current.compose(generator)
            if product not in elements:
                elements.add(product)
                queue.append(product)
    return sorted(elements, key=lambda m: m.images)


def automorphism_group(
    graph: Graph,
    budget: Optional[int] = None,
    enumeration_cap: Optional[int] = None,
) -> AutGroupSummary:
    """Exact |Aut(G)| as a product of orbit sizes along a base.

    At each level the first vertex of the smallest open cell is fixed; its
    orbit under the pointwise stabilizer of the earlier base points is found
    by one pinned isomorphism search per candidate. Groups no larger than
    ``enumeration_cap`` are enumerated to record element orders.
    """
    budget = budget or settings.aut_budget
    enumeration_cap = enumeration_cap or settings.aut_enumeration_cap
    if graph.n > budget:
        raise ResourceError("automorphism_count", graph.n, budget)

    search = _PairSearch(graph, graph)
    base: list[int] = []
    order = 1
    generators: list[VertexMapping] = []
    while True:
        pinned = [(b, b) for b in base]
        colors = refine(graph, _pinned_colors(graph.n, base))
        counts = Counter(colors)
        open_cells = [c for c, size in counts.items() if size > 1]
        if not open_cells:
            break
        target = min(open_cells, key=lambda c: (counts[c], c))
        v = colors.index(target)
        orbit = 1
        for w, c in enumerate(colors):
            if c != target or w == v:
                continue
            found = search.run(search.initial(pinned + [(v, w)]))
            if found is not None:
                orbit += 1
                generators.append(found)
        order *= orbit
        base.append(v)

    element_orders = None
    if order <= enumeration_cap:
        elements = _closure(generators, graph.n)
        if len(elements) != order:
            raise SolverConsistencyError(
                f"generators close to {len(elements)} elements, expected {order}"
            )
        element_orders = tuple(sorted(m.order for m in elements))
    logger.debug("automorphisms_counted", vertices=graph.n, order=order, base=len(base))
    return AutGroupSummary(order=order, generators=tuple(generators), element_orders=element_orders)


def _pinned_colors(n: int, base: Sequence[int]) -> list[int]:
    colors = [0] * n
    for index, v in enumerate(base, start=1):
        colors[v] = index
    return colors


def automorphism_count(graph: Graph, budget: Optional[int] = None) -> AutGroupSummary:
    return automorphism_group(graph, budget)
