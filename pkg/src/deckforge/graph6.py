"""graph6 encoding for graphs with at most 62 vertices."""

from __future__ import annotations

from .graph import Graph, GraphError

G6_MAX_N = 62


class Graph6Error(ValueError):
    pass


def write_graph6(g: Graph) -> str:
    if g.n > G6_MAX_N:
        raise Graph6Error(f"graph6 short form supports n <= {G6_MAX_N}")
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v < 64 for v in vals):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    n = vals[0]
    if n == 63:
        raise Graph6Error("graph6 long form (n > 62) is not supported")
    p = n * (n - 1) // 2
    need = (p + 5) // 6
    if len(vals) - 1 != need:
        raise Graph6Error(f"graph6 string for n={n} needs {need} data bytes, got {len(vals) - 1}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            v = vals[1 + k // 6]
            if v >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    try:
        return Graph(n, tuple(rows))
    except GraphError as e:
        raise Graph6Error(str(e)) from e
