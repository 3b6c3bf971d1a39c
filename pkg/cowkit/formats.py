"""graph6 and plain edge-list codecs
"""
import logging
from typing import List
from typing import Tuple

from .abstracts import Graph
from .exceptions import FormatError

logger = logging.getLogger("cowkit")

GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63
_SMALL_N = 62
_MEDIUM_N = 258047
_LARGE_N = 68719476735


def _encode_n(n: int) -> List[int]:
    if n <= _SMALL_N:
        return [n]

    if n <= _MEDIUM_N:
        return [63] + [(n >> shift) & 0x3F for shift in (12, 6, 0)]

    if n <= _LARGE_N:
        return [63, 63] + [(n >> shift) & 0x3F for shift in (30, 24, 18, 12, 6, 0)]

    raise FormatError(f"graph6 cannot hold {n} vertices")


def _decode_n(values: List[int], start: int) -> Tuple[int, int]:
    """Vertex count and number of values it took"""
    if values[0] < 63:
        return values[0], 1

    width = 8 if len(values) > 1 and values[1] == 63 else 4
    skip = width - (6 if width == 8 else 3)

    if len(values) < width:
        raise FormatError("Truncated vertex count", offset=start + len(values))

    n = 0

    for value in values[skip:width]:
        n = (n << 6) | value

    return n, width


def emit_graph6(graph: Graph) -> str:
    """Canonical graph6 line, no header and no newline"""
    values = _encode_n(graph.n)
    current = 0
    filled = 0

    for j in range(1, graph.n):
        row = graph.rows[j]

        for i in range(j):
            current = (current << 1) | (row >> i & 1)
            filled += 1

            if filled == 6:
                values.append(current)
                current = filled = 0

    if filled:
        values.append(current << (6 - filled))

    return "".join(chr(value + _BIAS) for value in values)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line, with or without the >>graph6<< header

    Byte offsets in errors count from the start of `text`.
    """
    data = text.rstrip("\r\n")
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0

    if start == len(data):
        raise FormatError("Empty graph6 string", offset=start)

    for offset in range(start, len(data)):
        if not _BIAS <= ord(data[offset]) <= _BIAS + 63:
            raise FormatError(f"Invalid graph6 byte {data[offset]!r}", offset=offset)

    values = [ord(ch) - _BIAS for ch in data[start:]]
    n, used = _decode_n(values, start)
    needed = (n * (n - 1) // 2 + 5) // 6
    body = values[used:]

    if len(body) < needed:
        raise FormatError(f"Truncated adjacency data for n={n}", offset=len(data))

    if len(body) > needed:
        raise FormatError("Trailing bytes after adjacency data", offset=start + used + needed)

    edges = []
    idx = 0

    for j in range(1, n):
        for i in range(j):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                edges.append((i, j))

            idx += 1

    logger.debug("Parsed graph6 with n=%s and %s edges", n, len(edges))
    return Graph.from_edges(n, edges)


def emit_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def _is_index(field: str) -> bool:
    return field.isascii() and field.isdigit()


def parse_edge_list(text: str) -> Graph:
    """One edge "u v" per line, an optional "n N" line fixes the vertex count

    Blank lines and lines starting with # are skipped. Without "n N" the
    count is one more than the largest vertex mentioned.
    """
    declared = None
    edges = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()

        if not line or line.startswith("#"):
            continue

        fields = line.split()

        if fields[0] == "n":
            if declared is not None or edges or len(fields) != 2 or not _is_index(fields[1]):
                raise FormatError("Malformed vertex count line", line=lineno)

            declared = int(fields[1])
            continue

        if len(fields) != 2 or not all(_is_index(field) for field in fields):
            raise FormatError(f"Expected two vertex ids, got {line!r}", line=lineno)

        edges.append((int(fields[0]), int(fields[1])))

    n = declared if declared is not None else max((max(edge) + 1 for edge in edges), default=0)

    if any(max(edge) >= n for edge in edges):
        raise FormatError(f"Edge endpoint outside declared vertex count {n}")

    if any(u == v for u, v in edges):
        raise FormatError("Self-loops are not allowed")

    return Graph.from_edges(n, edges)


def read_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse `text` as graph6 or an edge list, guessing when fmt is "auto"

    Auto mode reads a single token line as graph6, anything else as an edge list.
    """
    if fmt == "auto":
        meaningful = [line.strip() for line in text.splitlines() if line.strip()]
        single_token = len(meaningful) == 1 and len(meaningful[0].split()) == 1
        fmt = "graph6" if single_token and not meaningful[0].startswith("#") else "edges"

    if fmt == "graph6":
        return parse_graph6(text.strip())

    if fmt == "edges":
        return parse_edge_list(text)

    raise FormatError(f"Unknown graph format: {fmt}")
