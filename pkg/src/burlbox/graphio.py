"""graph6, plain edge-list and DOT encodings of :class:`Graph`."""
from __future__ import annotations

from .graph import Graph, GraphError, graph_from_edges


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or any(not 63 <= ord(ch) <= 126 for ch in s):
        raise GraphError("not a graph6 string")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size header")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size header")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    need = (n * (n - 1) // 2 + 5) // 6
    data = vals[pos:]
    if len(data) != need:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {need}")
    bits = [(v >> s) & 1 for v in data for s in range(5, -1, -1)]
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    if any(bits[k:]):
        raise GraphError("non-zero padding in graph6 body")
    return graph_from_edges(n, pairs)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with an 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise GraphError(f"bad edge list: {exc}") from None
    if len(pairs) != len(rows) - 1:
        raise GraphError("every edge line needs exactly two ids")
    if len(pairs) != m:
        raise GraphError(f"header promises {m} edges, found {len(pairs)}")
    return graph_from_edges(n, pairs)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels.get(v, v) if g.labels else v
        lines.append(f'  {v} [label="{label}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
