"""Exact canonical labelling by lexicographically minimal adjacency string.

The canonical string of a graph is the minimum, over all vertex orders
``v_0, ..., v_{n-1}``, of the bits ``x(v_0,v_1), x(v_0,v_2), ...,
x(v_0,v_{n-1}), x(v_1,v_2), ...`` (row-major upper triangle).  Read as an
integer with ``x(v_0,v_1)`` as the most significant bit, smaller strings are
smaller integers, so the code is just an ``int``.

The search places one vertex per level.  Positions still to be filled are
covered by an ordered partition of the unplaced vertices; the vertex at the
next position must come from the first cell, and once it is chosen its row
is lexicographically smallest exactly when every cell lists its
non-neighbours before its neighbours.  The row is therefore summarised by the
tuple of neighbour counts per cell, and only candidates with the smallest
tuple can lead to the minimum.  Remaining ties are cut with automorphisms
discovered at equal leaves (orbit pruning plus the usual jump back to the
level where an equal leaf diverged from the best one).
"""

from __future__ import annotations

from typing import Sequence


def _row_key(row: int, masks: Sequence[int]) -> tuple[int, ...]:
    return tuple((row & m).bit_count() for m in masks)


def _split(adj: Sequence[int], cells: list[list[int]], v: int) -> list[list[int]]:
    row = adj[v]
    out = []
    for cell in cells:
        non = []
        nb = []
        for u in cell:
            if u == v:
                continue
            if row >> u & 1:
                nb.append(u)
            else:
                non.append(u)
        if non:
            out.append(non)
        if nb:
            out.append(nb)
    return out


def _masks(cells: list[list[int]]) -> list[int]:
    out = []
    for cell in cells:
        m = 0
        for u in cell:
            m |= 1 << u
        out.append(m)
    return out


def _orbit_roots(cands: Sequence[int], auts: list[tuple[int, ...]], fixed: Sequence[int]) -> dict[int, int]:
    """Union-find roots of ``cands`` under the automorphisms fixing ``fixed`` pointwise."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for g in auts:
        if any(g[f] != f for f in fixed):
            continue
        for v in cands:
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cands}


def code_from_order(adj: Sequence[int], order: Sequence[int]) -> int:
    """Row-major upper-triangle bit string of ``adj`` relabelled by ``order``."""
    code = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


class _CanonSearch:
    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = adj
        self.best_rows: list[tuple[int, ...]] | None = None
        self.best_order: list[int] | None = None
        self.auts: list[tuple[int, ...]] = []

    def _relation(self, rows: list[tuple[int, ...]]) -> int:
        """-1 if ``rows`` is a strictly smaller prefix than the best leaf, 0 if equal."""
        if self.best_rows is None:
            return -1
        best = self.best_rows[: len(rows)]
        if rows < best:
            return -1
        return 0 if rows == best else 1

    def run(self) -> None:
        self._visit([list(range(self.n))], [], [])

    def _leaf(self, order: list[int], rows: list[tuple[int, ...]]) -> int | None:
        rel = self._relation(rows)
        if rel < 0:
            self.best_rows = list(rows)
            self.best_order = list(order)
            return None
        if rel > 0:
            return None
        assert self.best_order is not None
        g = [0] * self.n
        for a, b in zip(self.best_order, order):
            g[a] = b
        self.auts.append(tuple(g))
        for t, (a, b) in enumerate(zip(self.best_order, order)):
            if a != b:
                return t
        return None

    def _visit(self, cells: list[list[int]], order: list[int], rows: list[tuple[int, ...]]) -> int | None:
        level = len(order)
        if level == self.n:
            return self._leaf(order, rows)
        masks = _masks(cells)
        first = cells[0]
        keyed = [(_row_key(self.adj[v], masks), v) for v in first]
        low = min(k for k, _ in keyed)
        cands = [v for k, v in keyed if k == low]
        if self._relation(rows + [low]) > 0:
            return None
        tried: list[int] = []
        for v in cands:
            if tried:
                roots = _orbit_roots(cands, self.auts, order)
                if any(roots[v] == roots[w] for w in tried):
                    continue
            tried.append(v)
            if self._relation(rows + [low]) > 0:
                return None
            res = self._visit(_split(self.adj, cells, v), order + [v], rows + [low])
            if res is not None and res < level:
                return res
        return None


def canonical_order(n: int, adj: Sequence[int]) -> tuple[int, list[int], list[tuple[int, ...]]]:
    """Return ``(code, order, automorphisms)`` for the graph with rows ``adj``.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    The automorphisms are the ones met during the search; they generate a
    subgroup of the automorphism group, not necessarily all of it.
    """
    if n == 0:
        return 0, [], []
    s = _CanonSearch(n, adj)
    s.run()
    assert s.best_order is not None
    return code_from_order(adj, s.best_order), s.best_order, s.auts


def _first_match(adj: Sequence[int], n: int, cells: list[list[int]], order: list[int],
                 target: list[tuple[int, ...]], auts: list[tuple[int, ...]]) -> list[int] | None:
    """Depth-first search for a leaf whose rows equal ``target`` exactly."""
    level = len(order)
    if level == n:
        return order
    masks = _masks(cells)
    want = target[level]
    cands = [v for v in cells[0] if _row_key(adj[v], masks) == want]
    failed: list[int] = []
    for v in cands:
        if failed:
            roots = _orbit_roots(cands, auts, order)
            if any(roots[v] == roots[w] for w in failed):
                continue
        hit = _first_match(adj, n, _split(adj, cells, v), order + [v], target, auts)
        if hit is not None:
            return hit
        failed.append(v)
    return None


def automorphism_group_order(n: int, adj: Sequence[int]) -> int:
    """Order of the automorphism group via orbit sizes along the canonical path.

    With ``b`` the canonical order and ``G_i`` the pointwise stabiliser of
    ``b_0..b_{i-1}``, ``|Aut| = prod_i |b_i^{G_i}|``.  Each orbit is built by
    testing every same-row candidate for an automorphism of ``G_i`` carrying
    ``b_i`` to it, skipping candidates already linked by known automorphisms.
    """
    if n <= 1:
        return 1
    s = _CanonSearch(n, adj)
    s.run()
    assert s.best_order is not None and s.best_rows is not None
    best, target = s.best_order, s.best_rows
    auts = list(s.auts)
    # rebuild the ordered partitions along the canonical path
    path_cells = []
    cells = [list(range(n))]
    for v in best:
        path_cells.append(cells)
        cells = _split(adj, cells, v)
    total = 1
    for i in reversed(range(n)):
        cells = path_cells[i]
        masks = _masks(cells)
        fixed = best[:i]
        cands = [v for v in cells[0] if _row_key(adj[v], masks) == target[i]]
        for w in cands:
            roots = _orbit_roots(cands, auts, fixed)
            if roots[w] == roots[best[i]]:
                continue
            hit = _first_match(adj, n, _split(adj, cells, w), fixed + [w], target, auts)
            if hit is not None:
                g = [0] * n
                for a, b in zip(best, hit):
                    g[a] = b
                auts.append(tuple(g))
        roots = _orbit_roots(cands, auts, fixed)
        root = roots[best[i]]
        total *= sum(1 for w in cands if roots[w] == root)
    return total
