"""Text formats: graph6, plain edge list, DOT export, and format sniffing."""

from __future__ import annotations

import json

from .errors import GmfrtError, MalformedHeaderError, TruncatedBitstreamError
from .graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    bits: list[int] = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    values = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        values.append(sum(b << (5 - p) for p, b in enumerate(chunk)))
    return "".join(chr(v + 63) for v in values)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string; an optional ``>>graph6<<`` prefix is skipped."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise MalformedHeaderError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v < 64 for v in vals):
        raise MalformedHeaderError(f"character outside graph6 range in {s!r}")
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise MalformedHeaderError("truncated 18-bit vertex count")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise MalformedHeaderError("truncated 36-bit vertex count")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n < 1:
        raise MalformedHeaderError("graph6 vertex count must be positive")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = vals[pos:]
    if len(body) < need:
        raise TruncatedBitstreamError(f"expected {need} data bytes, found {len(body)}")
    if len(body) > need:
        raise TruncatedBitstreamError(f"{len(body) - need} trailing bytes after bitstream")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; blank lines and ``#`` comments ignored."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 2:
        raise GmfrtError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GmfrtError(f"bad edge list: {exc}") from None
    if len(edges) != m:
        raise GmfrtError(f"header declares {m} edges but {len(edges)} were listed")
    return from_edge_list(n, edges)


def to_dot(g: Graph) -> str:
    body = "".join(f"  {u} -- {v};\n" for u, v in g.edges)
    isolated = "".join(f"  {v};\n" for v in range(g.n) if not g.adj[v])
    return "graph {\n" + isolated + body + "}\n"


FORMATS = {
    "graph6": (to_graph6, parse_graph6),
    "edgelist": (to_edgelist, parse_edgelist),
    "dot": (to_dot, None),
}


def render(g: Graph, fmt: str) -> str:
    try:
        writer = FORMATS[fmt][0]
    except KeyError:
        raise GmfrtError(f"unknown graph format {fmt!r}") from None
    out = writer(g)
    return out if out.endswith("\n") else out + "\n"


def read_graph(text: str) -> Graph:
    """Parse graph6, an edge list, or a JSON object with ``graph`` and ``format`` keys."""
    s = text.strip()
    if not s:
        raise MalformedHeaderError("empty graph input")
    if s.startswith("{"):
        try:
            doc = json.loads(s)
            fmt, payload = doc["format"], doc["graph"]
        except (ValueError, KeyError, TypeError) as exc:
            raise GmfrtError(f"JSON graph input needs 'format' and 'graph': {exc}") from None
        parser = FORMATS.get(fmt, (None, None))[1]
        if parser is None:
            raise GmfrtError(f"cannot read graphs in format {fmt!r}")
        return parser(payload)
    first = s.splitlines()[0].split()
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return parse_edgelist(s)
    return parse_graph6(s)
