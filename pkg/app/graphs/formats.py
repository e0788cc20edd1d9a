"""graph6 and DOT serialization."""

from collections.abc import Sequence
from typing import Optional

from app.core.errors import Graph6ParseError
from app.graphs.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63
_MAX_SMALL = 62
_MAX_MEDIUM = 258047


def _encode_size(n: int) -> str:
    if n <= _MAX_SMALL:
        return chr(n + _BIAS)
    if n <= _MAX_MEDIUM:
        return "~" + "".join(chr(((n >> s) & 63) + _BIAS) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + _BIAS) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(graph: Graph) -> str:
    """Encode ``graph`` as a graph6 string (no header, no newline)."""
    bits = [
        graph.adjacency[j] >> i & 1
        for j in range(1, graph.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = value << 1 | bit
        body.append(chr(value + _BIAS))
    return _encode_size(graph.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is skipped."""
    data = text.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    values = []
    for offset, char in enumerate(data):
        code = ord(char)
        if not 63 <= code <= 126:
            raise Graph6ParseError(
                f"byte {code} outside the printable range 63..126", base + offset
            )
        values.append(code - _BIAS)

    if values[0] != 63:
        n, pos = values[0], 1
    elif len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise Graph6ParseError("truncated 8-byte length prefix", base + len(values))
        n, pos = 0, 8
        for value in values[2:8]:
            n = n << 6 | value
    else:
        if len(values) < 4:
            raise Graph6ParseError("truncated 4-byte length prefix", base + len(values))
        n, pos = 0, 4
        for value in values[1:4]:
            n = n << 6 | value

    needed = n * (n - 1) // 2
    expected = (needed + 5) // 6
    body = values[pos:]
    if len(body) != expected:
        raise Graph6ParseError(
            f"expected {expected} data bytes for {n} vertices, found {len(body)}",
            base + pos + min(len(body), expected),
        )

    rows = [0] * n
    index = 0
    for j in range(1, n):
        for i in range(j):
            value = body[index // 6]
            if value >> (5 - index % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            index += 1
    padding = expected * 6 - needed
    if padding and body[-1] & ((1 << padding) - 1):
        raise Graph6ParseError("non-zero padding bits", base + pos + expected - 1)
    return Graph(n=n, adjacency=tuple(rows))


def emit_dot(
    graph: Graph,
    name: str = "G",
    clusters: Optional[Sequence[Sequence[int]]] = None,
) -> str:
    """Render ``graph`` as undirected DOT text.

    Nodes are named by 1-based id and labelled with the graph's labels.
    When ``clusters`` is given, each vertex group becomes a ``cluster_<i>``
    subgraph.
    """
    lines = [f'graph "{name}" {{']

    def node_line(v: int, indent: str) -> str:
        label = graph.label(v).replace('"', '\\"')
        return f'{indent}n{v + 1} [label="{label}"];'

    if clusters:
        for index, members in enumerate(clusters, start=1):
            lines.append(f"  subgraph cluster_{index} {{")
            lines.extend(node_line(v, "    ") for v in members)
            lines.append("  }")
    else:
        lines.extend(node_line(v, "  ") for v in range(graph.n))
    lines.extend(f"  n{u + 1} -- n{v + 1};" for u, v in graph.iter_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
