"""Reading and writing graphs: graph6 and a small JSON schema.

graph6 layout (headerless):
  - byte 0: n+63 for n <= 62, or '~' followed by three bytes holding an
    18-bit big-endian value (63 <= n <= 258047).  The '~~' long form for
    larger n is rejected as out of scope.
  - then ceil(C(n,2)/6) bytes; each byte minus 63 gives six bits of the
    upper triangle read column by column: x(0,1), x(0,2), x(1,2), x(0,3)...
    The final byte is zero-padded on the right.  Parsing tolerates junk in
    the padding bits; serialization always emits zeros there.

JSON schema: {"n": <int>, "edges": [[u, v], ...]}.

Auto-detection tries JSON first; anything that does not parse as a JSON
object is treated as graph6 (a '{' can legitimately start a graph6 string,
so JSON wins ties by decree).
"""
from __future__ import annotations

import json
from typing import Any

from .graphs import Graph, edge

_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Malformed graph input; `offset` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 input", 0)
    data = [ord(c) for c in s]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"character {s[i]!r} outside graph6 alphabet", i)
    pos = 0
    if data[0] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            raise GraphParseError("graph6 long size form ('~~') not supported", 0)
        if len(data) < 4:
            raise GraphParseError("truncated graph6 size field", len(s))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    bits_needed = n * (n - 1) // 2
    bytes_needed = (bits_needed + 5) // 6
    if len(data) - pos < bytes_needed:
        raise GraphParseError(
            f"graph6 body too short: need {bytes_needed} bytes, have {len(data) - pos}",
            len(s),
        )
    if len(data) - pos > bytes_needed:
        raise GraphParseError("unexpected bytes after graph6 body", pos + bytes_needed)
    bits: list[int] = []
    for b in data[pos:]:
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, frozenset(edges))


def serialize_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise ValueError("graph too large for the supported graph6 sizes")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for group in range(0, len(bits), 6):
        val = 0
        for b in bits[group : group + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def graph_to_obj(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_obj(obj: Any) -> Graph:
    if isinstance(obj, str):
        return parse_graph6(obj)
    if not isinstance(obj, dict):
        raise GraphParseError(f"expected a graph object or graph6 string, got {type(obj).__name__}")
    if "n" not in obj:
        raise GraphParseError('graph object missing "n"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphParseError('"n" must be a non-negative integer')
    raw = obj.get("edges", [])
    if not isinstance(raw, list):
        raise GraphParseError('"edges" must be a list of pairs')
    pairs = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise GraphParseError(f"bad edge entry {item!r}")
        try:
            pairs.append(edge(item[0], item[1]))
        except ValueError as exc:
            raise GraphParseError(str(exc)) from exc
    try:
        return Graph(n, frozenset(pairs))
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    return graph_from_obj(obj)


def serialize_graph_json(g: Graph) -> str:
    return json.dumps(graph_to_obj(g))


def parse_graph(text: str) -> Graph:
    """Auto-detect the format; JSON wins whenever the text parses as JSON."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return parse_graph6(text)
    if isinstance(obj, dict):
        return graph_from_obj(obj)
    return parse_graph6(text)


def serialize_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return serialize_graph6(g)
    if fmt == "json":
        return serialize_graph_json(g)
    raise ValueError(f"unknown graph format {fmt!r}")
