"""graph6 encoding/decoding and DOT export.

graph6 packs the upper-triangle adjacency bits column by column, i.e. in
the order (0,1), (0,2), (1,2), (0,3), ..., six bits per printable byte
(value + 63). Orders up to 62 use a single header byte n+63; larger
orders use the '~' prefixed 18-bit form and the '~~' prefixed 36-bit
form. Parsing is strict: every structural defect is reported with the
byte offset where it was detected.
"""

from __future__ import annotations

from .graph import Graph, GraphError


class Graph6ParseError(GraphError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_LOW = 63
_HIGH = 126


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string."""
    n = g.order
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    elif n <= 68719476735:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    else:
        raise GraphError(f"order {n} cannot be encoded in graph6")
    adj = g.adjacency
    out = head
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; rejects malformed, truncated or trailing bytes."""
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6ParseError("non-ASCII byte", exc.start) from None
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    for pos, b in enumerate(data):
        if not _LOW <= b <= _HIGH:
            raise Graph6ParseError(f"byte {b} outside graph6 range 63..126", pos)

    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6ParseError("truncated extended order field", len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6ParseError("truncated extended order field", len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6ParseError("truncated adjacency bit stream", len(data))
    if len(data) - pos > nbytes:
        raise Graph6ParseError("trailing data after adjacency bits", pos + nbytes)

    value = 0
    for b in data[pos : pos + nbytes]:
        value = value << 6 | (b - 63)
    total = 6 * nbytes
    padding = total - nbits
    if padding and value & ((1 << padding) - 1):
        raise Graph6ParseError("nonzero padding bits", pos + nbytes - 1)

    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(adj)


def write_dot(g: Graph) -> str:
    """Render one ``graph { ... }`` block.

    Isolated vertices appear as bare node statements so that order is
    preserved; edges are listed as ``u -- v;`` sorted by (min, max).
    """
    lines = ["graph {"]
    for v in range(g.order):
        if g.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
