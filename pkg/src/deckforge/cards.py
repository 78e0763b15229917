"""Vectorised card extraction and canonical codes for small cards.

For card sizes up to ``TABLE_MAX_K`` every labelled k-vertex graph (as a
row-major upper-triangle mask) maps to its canonical code through a lazily
filled lookup array.  A miss is filled for the whole relabelling orbit at
once; the canonical code is the orbit minimum, which is the same value the
backtracking search in :mod:`deckforge.canon` returns.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, islice, permutations
from math import comb

import numpy as np

from . import canon
from .graph import Graph, code_bytes

TABLE_MAX_K = 7
CHUNK = 1 << 16


def npairs(n: int) -> int:
    return n * (n - 1) // 2


def _weights(p: int) -> np.ndarray:
    return (np.int64(1) << np.arange(p - 1, -1, -1, dtype=np.int64)) if p else np.zeros(0, np.int64)


@lru_cache(maxsize=None)
def _perm_sources(k: int) -> np.ndarray:
    """For every permutation, the source bit position of each target bit position."""
    pos = {pair: t for t, pair in enumerate(combinations(range(k), 2))}
    rows = []
    for perm in permutations(range(k)):
        inv = [0] * k
        for old, new in enumerate(perm):
            inv[new] = old
        rows.append([pos[tuple(sorted((inv[a], inv[b])))] for a, b in combinations(range(k), 2)])
    return np.array(rows, dtype=np.int16).reshape(len(rows), npairs(k))


class _Table:
    def __init__(self, k: int):
        self.k = k
        self.p = npairs(k)
        self.codes = np.full(1 << self.p, -1, dtype=np.int32)
        self.w = _weights(self.p)

    def fill(self, mask: int) -> None:
        bits = (mask >> np.arange(self.p - 1, -1, -1)) & 1
        src = _perm_sources(self.k)
        orbit = (bits[src].astype(np.int64) * self.w).sum(axis=1) if self.p else np.zeros(1, np.int64)
        self.codes[orbit] = orbit.min()

    def lookup(self, masks: np.ndarray) -> np.ndarray:
        out = self.codes[masks]
        if (out < 0).any():
            for m in np.unique(masks[out < 0]):
                if self.codes[m] < 0:
                    self.fill(int(m))
            out = self.codes[masks]
        return out.astype(np.int64)


_TABLES: dict[int, _Table] = {}


def table(k: int) -> _Table:
    if k not in _TABLES:
        _TABLES[k] = _Table(k)
    return _TABLES[k]


@lru_cache(maxsize=1 << 18)
def _search_code(k: int, mask: int) -> int:
    g = Graph.from_mask(k, mask)
    bits, _, _ = canon.canonical_order(k, g.adj)
    return bits


def canonical_bits(k: int, mask: int) -> int:
    """Canonical bit string of the labelled k-vertex graph ``mask``."""
    if k <= TABLE_MAX_K:
        return int(table(k).lookup(np.array([mask]))[0])
    return _search_code(k, mask)


def fast_code(g: Graph) -> bytes:
    """Same value as :func:`deckforge.graph.canonical_form`, table-backed when small."""
    return code_bytes(g.n, canonical_bits(g.n, g.to_mask()))


# ------------------------------------------------------------- extraction

def bits_matrix(graphs: list[Graph]) -> np.ndarray:
    """(N, C(n,2)) uint8 edge indicators in row-major upper-triangle order."""
    n = graphs[0].n
    p = npairs(n)
    out = np.zeros((len(graphs), p), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    for r, g in enumerate(graphs):
        a = np.array([[row >> j & 1 for j in range(n)] for row in g.adj], dtype=np.uint8)
        out[r] = a[iu]
    return out


def _pair_positions(n: int, subsets: np.ndarray) -> np.ndarray:
    k = subsets.shape[1]
    cols = []
    for a, b in combinations(range(k), 2):
        i = subsets[:, a].astype(np.int64)
        j = subsets[:, b].astype(np.int64)
        cols.append(i * n - i * (i + 1) // 2 + (j - i - 1))
    if not cols:
        return np.zeros((len(subsets), 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _subset_chunks(n: int, k: int, chunk: int = CHUNK):
    it = combinations(range(n), k)
    while True:
        block = list(islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), k)


@lru_cache(maxsize=64)
def subset_positions(n: int, k: int) -> np.ndarray:
    """Pair positions for every k-subset, only for moderate ``C(n,k)``."""
    return _pair_positions(n, next(_subset_chunks(n, k, comb(n, k))))


def card_code_matrix(bits: np.ndarray, n: int, k: int) -> np.ndarray:
    """Canonical code (as int) of every k-card of every graph row; shape (N, C(n,k))."""
    assert k <= TABLE_MAX_K
    tab = table(k)
    w = tab.w
    if comb(n, k) <= CHUNK:
        pos = subset_positions(n, k)
        masks = (bits[:, pos].astype(np.int64) * w).sum(axis=2) if k > 1 else np.zeros((len(bits), len(pos)), np.int64)
        return tab.lookup(masks)
    parts = []
    for sub in _subset_chunks(n, k):
        pos = _pair_positions(n, sub)
        masks = (bits[:, pos].astype(np.int64) * w).sum(axis=2)
        parts.append(tab.lookup(masks))
    return np.concatenate(parts, axis=1)


def card_counts(g: Graph, k: int) -> dict[int, int]:
    """Multiset of canonical card bit strings of ``g`` for card size ``k``."""
    if k <= TABLE_MAX_K:
        codes = card_code_matrix(bits_matrix([g]), g.n, k)[0]
        vals, cnt = np.unique(codes, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, cnt)}
    out: dict[int, int] = {}
    adj = g.adj
    for sub in combinations(range(g.n), k):
        mask = 0
        for i in range(k):
            row = adj[sub[i]]
            for j in range(i + 1, k):
                mask = (mask << 1) | (row >> sub[j] & 1)
        c = _search_code(k, mask)
        out[c] = out.get(c, 0) + 1
    return out
