"""Graph file formats: graph6 and a plain edge list.

graph6 is the standard 6-bit ASCII encoding (upper triangle, column major).
The edge list format is a header line ``p <n>`` followed by one ``u v``
line per edge, 0-based.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import Graph

__all__ = [
    "graph_to_graph6",
    "graph_from_graph6",
    "graph_to_edgelist",
    "graph_from_edgelist",
    "read_graph",
    "write_graph",
    "FORMATS",
]

FORMATS = ("graph6", "edges")

_G6_HEADER = ">>graph6<<"


def _g6_bits(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        col = g.masks[j]
        for i in range(j):
            bits.append(col >> i & 1)
    return bits


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise FormatError("graph6 writer supports at most 258047 vertices")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    bits = _g6_bits(g)
    body = []
    for start in range(0, len(bits), 6):
        group = bits[start : start + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(map(chr, head + body))


def graph_from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise FormatError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise FormatError("graph6 input contains bytes outside 63..126")
    if data[0] == 63:
        if len(data) < 4:
            raise FormatError("truncated graph6 order field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body length {len(data)} does not match order {n}"
        )
    bits = []
    for d in data:
        for shift in range(5, -1, -1):
            bits.append(d >> shift & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def graph_to_edgelist(g: Graph) -> str:
    lines = [f"p {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_edgelist(text: str) -> Graph:
    tokens = []
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            tokens.append(line.split())
    if not tokens:
        raise FormatError("empty edge-list input")
    header = tokens[0]
    if len(header) != 2 or header[0] != "p":
        raise FormatError("edge list must start with a 'p <n>' header")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad order {header[1]!r} in edge-list header") from exc
    edges = []
    for parts in tokens[1:]:
        if len(parts) != 2:
            raise FormatError(f"bad edge line {' '.join(parts)!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad edge line {' '.join(parts)!r}") from exc
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def read_graph(path: str, fmt: str = "graph6") -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == "graph6":
        return graph_from_graph6(text)
    if fmt == "edges":
        return graph_from_edgelist(text)
    raise FormatError(f"unknown format {fmt!r}")


def write_graph(g: Graph, path: str, fmt: str = "graph6") -> None:
    if fmt == "graph6":
        text = graph_to_graph6(g) + "\n"
    elif fmt == "edges":
        text = graph_to_edgelist(g)
    else:
        raise FormatError(f"unknown format {fmt!r}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)
