"""Export the drawn graphs as DOT and graph6 files."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from app.core.logging import get_logger
from app.graphs.formats import emit_dot, emit_graph6
from app.graphs.graph import Graph, cycle_graph, disjoint_union, path_graph
from app.graphs.invariants import connected_components
from app.graphs.staircase import staircase_graph
from app.graphs.tokens import token_graph

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Figure:
    name: str
    title: str
    graph: Graph
    clusters: Optional[list[list[int]]] = None


def figure_graphs() -> list[Figure]:
    two_paths = token_graph(disjoint_union(path_graph(4), path_graph(4)), 3).graph
    path_and_triangle = token_graph(disjoint_union(path_graph(4), cycle_graph(3)), 3).graph
    figures = [
        Figure("gamma3_2P4", "T3(2P_4)", two_paths, connected_components(two_paths)),
        Figure(
            "gamma3_P4_C3",
            "T3(P_4 + C_3)",
            path_and_triangle,
            connected_components(path_and_triangle),
        ),
        Figure("cs8", "CS_8", staircase_graph(8).graph),
    ]
    figures.extend(Figure(f"cs{n}", f"CS_{n}", staircase_graph(n).graph) for n in range(4, 8))
    return figures


def export_figures(outdir: Path) -> list[Path]:
    """Write ``<name>.dot`` and ``<name>.g6`` for every figure; returns the paths written."""
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for figure in figure_graphs():
        dot_path = outdir / f"{figure.name}.dot"
        dot_path.write_text(emit_dot(figure.graph, figure.title, figure.clusters), encoding="utf-8")
        g6_path = outdir / f"{figure.name}.g6"
        g6_path.write_text(emit_graph6(figure.graph) + "\n", encoding="ascii")
        written.extend([dot_path, g6_path])
        logger.info("figure_exported", name=figure.name, vertices=figure.graph.n)
    return written
