"""Reference implementations that share no code with the package under test.

Everything here goes through networkx or plain brute force over
permutations, so agreement with deckforge is real evidence.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_code(n: int, edges) -> int:
    """Minimum row-major upper-triangle bit string over all n! relabellings."""
    es = {frozenset(e) for e in edges}
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        bits = 0
        for i, j in combinations(range(n), 2):
            bits = (bits << 1) | (frozenset((inv[i], inv[j])) in es)
        if best is None or bits < best:
            best = bits
    return best


def brute_isomorphic(g, h) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    he = {frozenset(e) for e in h.edges()}
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[a], perm[b])) in he for a, b in g.edges()):
            return True
    return False


def nx_aut_count(g) -> int:
    h = to_nx(g)
    return sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())


def nx_deck(g, k) -> list[tuple[nx.Graph, int]]:
    """k-deck as (representative, multiplicity) pairs grouped by networkx isomorphism."""
    h = to_nx(g)
    reps: list[list] = []
    for s in combinations(range(g.n), k):
        card = h.subgraph(s)
        for r in reps:
            if nx.is_isomorphic(r[0], card):
                r[1] += 1
                break
        else:
            reps.append([nx.Graph(card), 1])
    return [(r[0], r[1]) for r in reps]


def nx_decks_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    used = set()
    for ga, ma in a:
        for j, (gb, mb) in enumerate(b):
            if j not in used and ma == mb and nx.is_isomorphic(ga, gb):
                used.add(j)
                break
        else:
            return False
    return True


def nx_induced_count(g, f) -> int:
    h, fx = to_nx(g), to_nx(f)
    return sum(nx.is_isomorphic(h.subgraph(s), fx) for s in combinations(range(g.n), f.n))


def labelled_class_count(n: int) -> int:
    """Isomorphism classes among all 2^C(n,2) labelled graphs, via brute_code."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        seen.add(brute_code(n, edges))
    return len(seen)
