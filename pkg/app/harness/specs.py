"""Graph spec strings used on the command line.

``path:<n>``, ``cycle:<n>``, ``complete:<n>``, ``star:<n>``, ``empty:<n>``,
``union:<spec>+<spec>[+...]``, a graph6 string, or a file holding one.
"""

from collections.abc import Callable
from pathlib import Path

from app.core.errors import DomainError
from app.graphs.formats import parse_graph6
from app.graphs.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
    union_all,
)

FAMILIES: dict[str, Callable[[int], Graph]] = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
    "empty": empty_graph,
}


def parse_graph_spec(spec: str) -> Graph:
    text = spec.strip()
    if text.startswith("union:"):
        operands = text[len("union:"):].split("+")
        if any(not op for op in operands):
            raise DomainError(f"empty operand in {spec!r}")
        return union_all(parse_graph_spec(op) for op in operands)

    family, sep, size = text.partition(":")
    if sep and family in FAMILIES:
        try:
            n = int(size)
        except ValueError:
            raise DomainError(f"{family} needs an integer size, got {size!r}") from None
        return FAMILIES[family](n)

    path = Path(text)
    try:
        is_file = path.is_file()
    except OSError:  # graph6 text longer than a file name
        is_file = False
    if is_file:
        lines = [line for line in path.read_text(encoding="ascii").splitlines() if line.strip()]
        if not lines:
            raise DomainError(f"{path} holds no graph")
        return parse_graph6(lines[0])
    return parse_graph6(text)
