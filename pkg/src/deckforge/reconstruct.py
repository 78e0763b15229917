"""Reconstruction of special graph families from their decks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import prod

from .cards import fast_code
from .deck import (
    Deck,
    card_census,
    compute_deck,
    deck_complement,
    decks_equal,
    induced_census,
    subdeck,
)
from .degrees import DegreeListError, observed_max_degree, solve_degree_list
from .graph import (
    Connectivity,
    Graph,
    block_decomposition,
    complement,
    complete,
    connectivity_class,
    disjoint_union,
    empty_graph,
    graph_from_code,
    induced_subgraph,
    merge_vertices,
    path,
)


class ReconstructionError(ValueError):
    pass


class HereditaryClass(str, Enum):
    CLIQUE_UNION = "clique_union"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    NEITHER = "neither"


_P3 = fast_code(path(3))
_K2K1 = fast_code(disjoint_union(complete(2), empty_graph(1)))


def recognize_hereditary_class(d: Deck) -> HereditaryClass:
    if d.k < 3:
        raise ReconstructionError("recognition needs cards with at least 3 vertices")
    d3 = subdeck(d, 3)
    if _P3 not in d3.cards:
        return HereditaryClass.CLIQUE_UNION
    if _K2K1 not in d3.cards:
        return HereditaryClass.COMPLETE_MULTIPARTITE
    return HereditaryClass.NEITHER


# ------------------------------------------------------- multipartite graphs

@dataclass(frozen=True)
class PartSizes:
    parts: tuple[int, ...]
    elementary: tuple[int, ...]


def _divisors(x: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= x:
        if x % i == 0:
            small.append(i)
            if i != x // i:
                large.append(x // i)
        i += 1
    return small + large[::-1]


def parts_from_elementary(e: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Positive integer roots of x^r - e1 x^(r-1) + e2 x^(r-2) - ..., largest first."""
    r = len(e)
    if r == 0:
        return ()
    # coefficients, highest power first
    poly = [1] + [(-1) ** (j + 1) * e[j] for j in range(r)]
    if poly[-1] == 0:
        raise ReconstructionError("zero constant term: a part of size 0")
    roots = []
    for q in _divisors(abs(poly[-1])):
        while len(poly) > 1:
            # synthetic division by (x - q)
            acc = [poly[0]]
            for c in poly[1:]:
                acc.append(acc[-1] * q + c)
            if acc[-1] != 0:
                break
            roots.append(q)
            poly = acc[:-1]
    if len(roots) != r:
        raise ReconstructionError(f"polynomial from e = {tuple(e)} has no full set of positive integer roots")
    return tuple(sorted(roots, reverse=True))


def _clique_counts(d: Deck) -> list[int]:
    """e_j = number of complete j-cards in the derived j-deck, j = 1..k."""
    out = []
    cur = d
    levels = {}
    while True:
        levels[cur.k] = cur
        if cur.k == 1:
            break
        cur = subdeck(cur, cur.k - 1)
    for j in range(1, d.k + 1):
        out.append(levels[j].cards.get(fast_code(complete(j)), 0))
    return out


def _parts_of_card(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in complement(g).components()), reverse=True))


def reconstruct_complete_multipartite(d: Deck) -> PartSizes:
    if d.k == d.n:
        (code,) = d.cards
        g = graph_from_code(code)
        parts = _parts_of_card(g)
        e = tuple(sum(prod(c) for c in combinations(parts, j)) for j in range(1, len(parts) + 1))
        return PartSizes(parts, e)
    if d.k >= 3 and _K2K1 in subdeck(d, 3).cards:
        raise ReconstructionError("deck has an induced P_2+P_1: not complete multipartite")
    e_all = _clique_counts(d)
    r = max(j for j, c in enumerate(e_all, start=1) if c > 0)
    if d.k <= r:
        raise ReconstructionError(f"complete {r}-cards present but cards have only {d.k} vertices; need k >= r+1")
    e = e_all[:r]
    parts = parts_from_elementary(e)
    if sum(parts) != d.n:
        raise ReconstructionError(f"parts {parts} do not sum to {d.n}")
    return PartSizes(parts, tuple(e))


def reconstruct_clique_union(d: Deck) -> PartSizes:
    if d.k >= 3 and recognize_hereditary_class(d) is not HereditaryClass.CLIQUE_UNION:
        raise ReconstructionError("deck has an induced P_3: not a disjoint union of cliques")
    return reconstruct_complete_multipartite(deck_complement(d))


# ------------------------------------------------------- disconnected graphs

def _contains_count(host: bytes, f: bytes) -> int:
    return card_census(host, f[0]).get(f, 0)


def depth_index(connected: dict[bytes, int]) -> dict[bytes, int]:
    """Longest chain of proper connected induced supergraphs above each F."""
    by_size = sorted(connected, key=lambda c: (-c[0], c))
    depth: dict[bytes, int] = {}
    for f in by_size:
        above = [depth[h] for h in depth if h[0] > f[0] and _contains_count(h, f) > 0]
        depth[f] = 1 + max(above) if above else 0
    return depth


def reconstruct_components(d: Deck) -> dict[bytes, int]:
    """Component multiset, promised every component has at most k vertices."""
    census = induced_census(d)
    connected = {c: s for c, s in census.items() if s > 0 and graph_from_code(c).is_connected()}
    depth = depth_index(connected)
    comps: dict[bytes, int] = {}
    for f in sorted(connected, key=lambda c: (depth[c], -c[0], c)):
        total = connected[f]
        for h, ch in comps.items():
            if h[0] > f[0] and depth[h] < depth[f]:
                total -= _contains_count(h, f) * ch
        if total < 0:
            raise ReconstructionError(f"negative component count for {graph_from_code(f)!r}")
        if total:
            comps[f] = total
    n = sum(code[0] * c for code, c in comps.items())
    if n != d.n:
        raise ReconstructionError(f"components cover {n} vertices, not {d.n}: promise violated or invalid deck")
    return dict(sorted(comps.items()))


def graph_from_components(comps: dict[bytes, int]) -> Graph:
    parts = []
    for code, c in sorted(comps.items()):
        parts += [graph_from_code(code)] * c
    return disjoint_union(*parts)


# ---------------------------------------------------------- regular graphs

def _deficient(g: Graph, r: int) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) < r]


def is_near_regular(g: Graph, r: int) -> bool:
    return len(_deficient(g, r)) == 1


def _is_leaf_block_shape(g: Graph, r: int) -> bool:
    return g.n >= 2 and connectivity_class(g) is Connectivity.TWO_CONNECTED and is_near_regular(g, r)


def _check_regular(d: Deck, r: int) -> None:
    if d.k <= r:
        raise ReconstructionError(f"cards of size {d.k} cannot certify {r}-regularity")
    if observed_max_degree(d) != r:
        raise ReconstructionError(f"cards show maximum degree {observed_max_degree(d)}, not {r}")
    try:
        dl = solve_degree_list(d, {})
    except DegreeListError as e:
        raise ReconstructionError(f"degree list not recoverable: {e}") from e
    if dl.counts[r] != d.n:
        raise ReconstructionError(f"degree list {dl.degrees} is not {r}-regular")


def find_leaf_blocks(d: Deck, r: int) -> dict[bytes, int]:
    """Leaf blocks of an r-regular host: near r-regular induced pieces without a cut vertex."""
    _check_regular(d, r)
    census = induced_census(d)
    out = {}
    for code, s in census.items():
        if s > 0 and _is_leaf_block_shape(graph_from_code(code), r):
            out[code] = s
    return dict(sorted(out.items()))


def _leaf_block_multiset(h: Graph, r: int) -> Counter:
    bd = block_decomposition(h)
    out: Counter = Counter()
    for b in bd.leaf_blocks():
        piece = induced_subgraph(h, b)
        if _is_leaf_block_shape(piece, r):
            out[fast_code(piece)] += 1
    return out


def reconstruct_regular_cutvertex(d: Deck, r: int) -> Graph:
    leaves = find_leaf_blocks(d, r)
    if not leaves:
        return graph_from_components(reconstruct_components(d))
    b_code = min(leaves, key=lambda c: (c[0], c))
    b = graph_from_code(b_code)
    s = b.n
    rest = Counter(leaves)
    rest[b_code] -= 1
    rest = +rest
    (bx,) = _deficient(b, r)
    cards = subdeck(d, d.n - s + 1)
    for code in sorted(cards.cards):
        h = graph_from_code(code)
        if not h.is_connected() or not is_near_regular(h, r):
            continue
        if _leaf_block_multiset(h, r) != rest:
            continue
        (hx,) = _deficient(h, r)
        g = merge_vertices(b, h, bx, hx)
        if decks_equal(compute_deck(g, d.k), d):
            return g
    raise ReconstructionError("no card passes the leaf-block test and deck verification")
