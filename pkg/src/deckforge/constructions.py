"""Known families of non-isomorphic graphs with equal (or overlapping) decks."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .deck import compute_deck, deck_common, decks_equal
from .graph import (
    MAX_N,
    Graph,
    GraphError,
    canonical_form,
    complete_multipartite,
    cycle,
    disjoint_union,
    graph_from_code,
    path,
    spider,
    star_forest,
)
from .graph6 import write_graph6

FAMILIES = (
    "cycle_split",
    "cycle_path",
    "path_shift",
    "maxdeg2_general",
    "spider_pair",
    "cycle_vs_spider",
    "manvel_stars",
    "erpart_pair",
    "path_vs_cycle_path",
    "myrvold_common",
)


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


@dataclass
class Verification:
    ok: bool
    reason: str
    k: int
    tally: dict[str, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def _arity(params, n, name):
    if len(params) != n:
        raise FamilyError(f"{name} takes {n} parameter(s), got {len(params)}")


def _union(*gs: Graph) -> Graph:
    return disjoint_union(*[g for g in gs if g is not None])


def _p(n: int) -> Graph | None:
    # P_0 contributes nothing to a union
    return path(n) if n > 0 else None


def _maxdeg2_components(spec: list[int]) -> Graph:
    """Positive entries are cycle lengths, negative entries path orders."""
    parts = []
    for c in spec:
        if c > 0:
            parts.append(cycle(c))
        elif c < 0:
            parts.append(path(-c))
        else:
            raise FamilyError("component length 0")
    return disjoint_union(*parts)


def _split_maxdeg2(params):
    if len(params) < 4 or 0 not in params[1:]:
        raise FamilyError("maxdeg2_general params: k, components of G..., 0, components of H...")
    k = params[0]
    i = params.index(0, 1)
    return k, list(params[1:i]), list(params[i + 1:])


def _build(spec: FamilySpec) -> tuple[Graph, Graph, int]:
    """Both graphs and the claimed card size, without checking the family's bounds."""
    f, p = spec.family, spec.params
    if f == "cycle_split":
        _arity(p, 3, f)
        k, q, r = p
        return cycle(q + r), disjoint_union(cycle(q), cycle(r)), k
    if f == "cycle_path":
        _arity(p, 3, f)
        k, q, r = p
        return path(q + r), _union(cycle(q), _p(r)), k
    if f == "path_shift":
        _arity(p, 3, f)
        k, q, r = p
        return _union(_p(q - 1), _p(r)), _union(_p(q), _p(r - 1)), k
    if f == "maxdeg2_general":
        k, gs, hs = _split_maxdeg2(p)
        return _maxdeg2_components(gs), _maxdeg2_components(hs), k
    if f == "spider_pair":
        _arity(p, 1, f)
        (k,) = p
        return spider(k - 1, k - 1, 1), spider(k, k - 2, 1), k
    if f == "cycle_vs_spider":
        _arity(p, 3, f)
        a, b, c = p
        return _union(cycle(a + b + c), path(1)), spider(a, b, c), 3
    if f == "manvel_stars":
        _arity(p, 1, f)
        (k,) = p
        g = [k - 2 * i for i in range(k // 2 + 1) for _ in range(comb(k, 2 * i))]
        h = [k - 1 - 2 * i for i in range((k - 1) // 2 + 1) for _ in range(comb(k, 2 * i + 1))]
        return star_forest(g), star_forest(h), k
    if f == "erpart_pair":
        _arity(p, 0, f)
        return complete_multipartite(7, 4, 3), complete_multipartite(6, 6, 1, 1), 3
    if f == "path_vs_cycle_path":
        _arity(p, 1, f)
        (ell,) = p
        return path(2 * ell), _union(cycle(ell + 1), _p(ell - 1)), ell
    if f == "myrvold_common":
        _arity(p, 1, f)
        (t,) = p
        return complete_multipartite(t, t), complete_multipartite(t + 1, t - 1), 2 * t - 1
    raise FamilyError(f)  # pragma: no cover


def _check_bounds(spec: FamilySpec) -> None:
    f, p = spec.family, spec.params
    bad = None
    if f == "cycle_split":
        k, q, r = p
        if k < 1 or q < k + 1 or r < k + 1:
            bad = "needs q, r >= k+1"
    elif f == "cycle_path":
        k, q, r = p
        if k < 1 or q < k + 1 or r < max(k - 1, 1):
            bad = "needs q >= k+1 and r >= max(k-1, 1)"
    elif f == "path_shift":
        k, q, r = p
        if k < 1 or q < k or r < k:
            bad = "needs q, r >= k"
        elif q == r:
            bad = "q = r gives the same graph twice"
    elif f == "maxdeg2_general":
        k, gs, hs = _split_maxdeg2(p)
        for c in gs + hs:
            if (c > 0 and c < k + 1) or (c < 0 and -c < k - 1):
                bad = "components must be cycles with >= k+1 or paths with >= k-1 vertices"
        nv = lambda cs: sum(abs(c) for c in cs)
        ne = lambda cs: sum(c if c > 0 else -c - 1 for c in cs)
        if nv(gs) != nv(hs) or ne(gs) != ne(hs):
            bad = "graphs need equal vertex and edge counts"
        elif sorted(gs) == sorted(hs):
            bad = "the component lists coincide"
    elif f == "spider_pair":
        if p[0] < 3:
            bad = "needs k >= 3"
    elif f == "cycle_vs_spider":
        if min(p) < 1 or sum(p) < 4:
            bad = "needs positive legs with a+b+c >= 4"
    elif f == "manvel_stars":
        if not 2 <= p[0] <= 5:
            bad = "needs 2 <= k <= 5"
    elif f == "path_vs_cycle_path":
        if p[0] < 2:
            bad = "needs ell >= 2"
    elif f == "myrvold_common":
        if p[0] < 2:
            bad = "needs t >= 2"
    if bad:
        raise FamilyError(f"{f}{p}: {bad}")


def same_deck_pair(spec: FamilySpec) -> tuple[Graph, Graph, int]:
    try:
        g, h, k = _build(spec)
    except GraphError as e:
        raise FamilyError(str(e)) from e
    _check_bounds(spec)
    if max(g.n, h.n) > MAX_N:
        raise FamilyError("family member above the vertex cap")
    return g, h, k


def _tally(d) -> dict[str, int]:
    return {write_graph6(graph_from_code(c)): m for c, m in d.items()}


def verify_construction(spec: FamilySpec) -> Verification:
    """Exact check of the family's claim; out-of-bound parameters are allowed here."""
    try:
        g, h, k = _build(spec)
    except (GraphError, FamilyError) as e:
        return Verification(False, f"cannot build: {e}", 0)
    if g.n != h.n:
        return Verification(False, f"orders differ: {g.n} vs {h.n}", k)
    if not 1 <= k <= g.n:
        return Verification(False, f"card size {k} out of range", k)
    if canonical_form(g) == canonical_form(h):
        return Verification(False, "the two graphs are isomorphic", k)
    dg, dh = compute_deck(g, k), compute_deck(h, k)
    if spec.family == "myrvold_common":
        t = spec.params[0]
        common = deck_common(dg, dh)
        ok = common.total() >= t + 1
        return Verification(ok, f"{common.total()} common cards (need {t + 1})", k, _tally(common))
    if not decks_equal(dg, dh):
        return Verification(False, f"{k}-decks differ", k)
    return Verification(True, f"equal {k}-decks", k, _tally(dg))


def max_degree_pair(spec: FamilySpec) -> tuple[int, int]:
    g, h, _ = _build(spec)
    return g.max_degree, h.max_degree

