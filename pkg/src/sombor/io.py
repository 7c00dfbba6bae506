"""Text formats: graph6 and a plain edge list ``"n; u v; u v; ..."``."""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"order {n} too large for graph6")


def write_graph6(g: Graph) -> str:
    n = g.order
    adj = g.adjacency
    bits = []
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip("\r\n")
    start = 0
    if s.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    data = s[start:]
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", start + k)
    if not data:
        raise Graph6Error("empty graph6 string", start)
    if ord(data[0]) < 126:
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) < 4 or ord(data[1]) == 126:
            raise Graph6Error("truncated or unsupported long order header", start)
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    if n < 1:
        raise Graph6Error("graph of order 0 is not supported", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < need:
        raise Graph6Error(f"payload truncated: need {need} bytes, found {len(payload)}", start + len(data))
    if len(payload) > need:
        raise Graph6Error("trailing bytes after payload", start + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(payload[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and (ord(payload[-1]) - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("non-zero padding bits", start + pos + need - 1)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    return "; ".join([str(g.order)] + [f"{u} {v}" for u, v in g.edge_list()])


def parse_edge_list(text: str) -> Graph:
    parts = [p.strip() for p in text.replace("\n", ";").split(";")]
    parts = [p for p in parts if p]
    if not parts:
        raise GraphError("empty edge list")
    if not parts[0].isdigit():
        raise GraphError(f"edge list must start with the order, got {parts[0]!r}")
    edges = []
    for p in parts[1:]:
        fields = p.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphError(f"malformed edge {p!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return Graph(int(parts[0]), edges)


def parse_graph(text: str) -> Graph:
    """Accept either format. graph6 never contains digits or ``;``."""
    s = text.strip()
    if any(ch.isdigit() or ch == ";" for ch in s):
        return parse_edge_list(s)
    return parse_graph6(s)
