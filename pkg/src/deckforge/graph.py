"""Small simple graphs as tuples of adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from . import canon

MAX_N = 64
AUT_MAX_N = 16


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Labelled simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Equality is
    labelled equality; use :func:`is_isomorphic` for isomorphism.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise GraphError(f"vertex count {self.n} outside [1, {MAX_N}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def degree_list(self) -> tuple[int, ...]:
        """Degrees in nonincreasing order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(list(_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def to_mask(self) -> int:
        """Row-major upper-triangle bits, ``x(0,1)`` most significant."""
        return canon.code_from_order(self.adj, range(self.n))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        pos = n * (n - 1) // 2 - 1
        for i in range(n):
            for j in range(i + 1, n):
                if mask >> pos & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos -= 1
        return cls(n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_N:
        raise GraphError(f"vertex count {n} outside [1, {MAX_N}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# ---------------------------------------------------------------- families

def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves}; ``star(0)`` is K_1."""
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("complete_multipartite needs positive part sizes")
    label = []
    for i, p in enumerate(parts):
        label += [i] * p
    n = len(label)
    return make_graph(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def spider(a: int, b: int, c: int) -> Graph:
    """S_{a,b,c}: legs with a, b, c edges joined at vertex 0."""
    if min(a, b, c) < 1:
        raise GraphError("spider legs must have positive length")
    edges = []
    nxt = 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return make_graph(nxt, edges)


def star_forest(leaf_counts: Sequence[int]) -> Graph:
    """Disjoint union of stars K_{1,s} for each ``s`` in ``leaf_counts``."""
    if not leaf_counts or any(s < 0 for s in leaf_counts):
        raise GraphError("star_forest needs nonnegative leaf counts")
    return disjoint_union(*[star(s) for s in leaf_counts])


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "spider": (spider, 3),
}


def basic_family(kind: str, params: Sequence[int]) -> Graph:
    params = [int(p) for p in params]
    if kind == "complete_multipartite":
        return complete_multipartite(*params)
    if kind == "star_forest":
        return star_forest(params)
    if kind not in _FAMILIES:
        raise GraphError(f"unknown family {kind!r}")
    fn, arity = _FAMILIES[kind]
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if kind != "star" and min(params) < 1:
        raise GraphError(f"{kind} parameters must be positive")
    if kind == "star" and params[0] < 0:
        raise GraphError("star needs a nonnegative leaf count")
    return fn(*params)


# ------------------------------------------------------------- operations

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    if n > MAX_N:
        raise GraphError(f"union has {n} vertices, above the cap of {MAX_N}")
    rows: list[int] = []
    off = 0
    for g in graphs:
        rows.extend(r << off for r in g.adj)
        off += g.n
    return Graph(n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``; new label ``i`` is the i-th listed vertex.

    Sets are taken in increasing order.
    """
    vs = sorted(vertices) if isinstance(vertices, (set, frozenset)) else list(vertices)
    if not vs:
        raise GraphError("induced subgraph of an empty vertex set")
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        raise GraphError("vertex set has repeats or out-of-range vertices")
    rows = []
    for v in vs:
        r = g.adj[v]
        rows.append(sum(1 << i for i, u in enumerate(vs) if r >> u & 1))
    return Graph(len(vs), tuple(rows))


def merge_vertices(g: Graph, h: Graph, gv: int, hv: int) -> Graph:
    """Glue ``g`` and ``h`` by identifying ``gv`` in ``g`` with ``hv`` in ``h``."""
    n = g.n + h.n - 1
    if n > MAX_N:
        raise GraphError("merged graph above the vertex cap")
    # h keeps its labels; g's vertices follow, with gv mapped to hv
    where = {}
    nxt = h.n
    for v in range(g.n):
        if v == gv:
            where[v] = hv
        else:
            where[v] = nxt
            nxt += 1
    edges = list(h.edges()) + [(where[u], where[v]) for u, v in g.edges()]
    return make_graph(n, edges)


# ------------------------------------------------------------ canonical forms

def code_bytes(n: int, bits: int) -> bytes:
    """Pack ``n`` and a ``C(n,2)``-bit string (MSB first) into a byte code."""
    p = n * (n - 1) // 2
    nbytes = (p + 7) // 8
    return bytes([n]) + (bits << (8 * nbytes - p)).to_bytes(nbytes, "big")


def code_bits(code: bytes) -> tuple[int, int]:
    n = code[0]
    p = n * (n - 1) // 2
    nbytes = (p + 7) // 8
    return n, int.from_bytes(code[1:], "big") >> (8 * nbytes - p)


def canonical_form(g: Graph) -> bytes:
    """Byte code: ``n`` followed by the minimal row-major adjacency string."""
    bits, _, _ = canon.canonical_order(g.n, g.adj)
    return code_bytes(g.n, bits)


def canonical_relabel(g: Graph) -> Graph:
    bits, _, _ = canon.canonical_order(g.n, g.adj)
    return Graph.from_mask(g.n, bits)


def graph_from_code(code: bytes) -> Graph:
    n, bits = code_bits(code)
    return Graph.from_mask(n, bits)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_list() != h.degree_list():
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_count(g: Graph) -> int:
    if g.n > AUT_MAX_N:
        raise GraphError(f"automorphism_count is limited to n <= {AUT_MAX_N}")
    return canon.automorphism_group_order(g.n, g.adj)


# ------------------------------------------------------------ connectivity

class Connectivity(str, Enum):
    DISCONNECTED = "disconnected"
    CUT_VERTEX = "connected_with_cut_vertex"
    TWO_CONNECTED = "two_connected"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]
    leaf_flags: list[bool]

    def leaf_blocks(self) -> list[frozenset[int]]:
        return [b for b, leaf in zip(self.blocks, self.leaf_flags) if leaf]


def _biconnected(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Hopcroft-Tarjan on one component per root, iteratively."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        if g.adj[root] == 0:
            blocks.append(frozenset([root]))
            continue
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    if v == root:
                        root_children += 1
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cuts.add(u)
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (u, v):
                            break
                    blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def connectivity_class(g: Graph) -> Connectivity:
    if g.n == 1:
        return Connectivity.TWO_CONNECTED
    if not g.is_connected():
        return Connectivity.DISCONNECTED
    _, cuts = _biconnected(g)
    return Connectivity.CUT_VERTEX if cuts else Connectivity.TWO_CONNECTED


def block_decomposition(g: Graph) -> BlockDecomposition:
    if not g.is_connected():
        raise GraphError("block decomposition needs a connected graph")
    blocks, cuts = _biconnected(g)
    blocks.sort(key=lambda b: sorted(b))
    flags = [len(b & cuts) <= 1 for b in blocks]
    return BlockDecomposition(blocks, frozenset(cuts), flags)
