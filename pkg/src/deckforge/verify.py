"""The acceptance checks, shared by ``deckforge verify-paper`` and the test suite.

Each check returns a :class:`CheckResult`; a check passes only when the
exact mathematical condition holds and it finished inside its time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable

from .constructions import FamilySpec, max_degree_pair, same_deck_pair, verify_construction
from .deck import (
    compute_deck,
    count_induced,
    deck_common,
    deck_complement,
    deck_union,
    decks_equal,
    derive_subdeck,
)
from .degrees import DegreeListError, degree_list_from_deck
from .graph import (
    Graph,
    canonical_form,
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty_graph,
    graph_from_code,
    induced_subgraph,
    make_graph,
    path,
    spider,
)
from .graph6 import parse_graph6, write_graph6
from .reconstruct import (
    ReconstructionError,
    reconstruct_complete_multipartite,
    reconstruct_components,
    reconstruct_regular_cutvertex,
)
from .search import enumerate_graphs, max_reconstructibility, same_deck_classes


@dataclass
class CheckResult:
    ok: bool
    detail: str
    elapsed: float = 0.0


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    budget: float  # seconds
    run: Callable[..., tuple[bool, str]]


def _g6(g: Graph) -> str:
    return write_graph6(graph_from_code(canonical_form(g)))


def multipartite_census(**_) -> tuple[bool, str]:
    a = compute_deck(complete_multipartite(7, 4, 3), 3)
    b = compute_deck(complete_multipartite(6, 6, 1, 1), 3)
    want = {complete(3): 84, path(3): 240, empty_graph(3): 40}
    counts = {_g6(g): a.count_of(g) for g in want}
    ok = decks_equal(a, b) and a.total() == 364 and all(a.count_of(g) == c for g, c in want.items())
    return ok, f"equal={decks_equal(a, b)} counts={counts}"


def small_exceptional(**kw) -> tuple[bool, str]:
    rep = same_deck_classes(5, 3, jobs=kw.get("jobs", 1))
    c4p1 = disjoint_union(cycle(4), path(1))
    s211 = spider(2, 1, 1)
    want = sorted([sorted([_g6(c4p1), _g6(s211)]), sorted([_g6(complement(c4p1)), _g6(complement(s211))])])
    return rep.classes == want, f"classes={rep.classes}"


def two_recon_window(stretch: bool = False, **kw) -> tuple[bool, str]:
    sizes = [6, 7, 8] + ([9] if stretch else [])
    found = {}
    for n in sizes:
        found[n] = len(same_deck_classes(n, n - 2, jobs=kw.get("jobs", 1), checkpoint_dir=kw.get("checkpoint_dir")).classes)
    return all(v == 0 for v in found.values()), f"classes per n: {found}"


def seven_vertex_pairs(**kw) -> tuple[bool, str]:
    rep = same_deck_classes(7, 4, jobs=kw.get("jobs", 1))
    sizes = sorted(len(c) for c in rep.classes)
    mixed = sum(len({parse_graph6(s).is_connected() for s in cls}) > 1 for cls in rep.classes)
    ok = len(rep.classes) == 3 and sizes == [2, 2, 2] and mixed == 0
    return ok, f"{len(rep.classes)} classes, sizes {sizes}, mixed connectivity in {mixed}"


def twocomp_sweep(**_) -> tuple[bool, str]:
    checked, failed = 0, []
    for fam in ("cycle_split", "cycle_path", "path_shift"):
        for k in range(3, 7):
            for q in range(1, 15):
                for r in range(1, 15):
                    spec = FamilySpec(fam, (k, q, r))
                    try:
                        g, _, _ = same_deck_pair(spec)
                    except ValueError:
                        continue
                    if g.n > 14:
                        continue
                    checked += 1
                    if not verify_construction(spec):
                        failed.append(spec.params)
    trio = [disjoint_union(cycle(5), path(1)), spider(2, 2, 1), spider(3, 1, 1)]
    decks = [compute_deck(g, 3) for g in trio]
    same = all(decks_equal(decks[0], d) for d in decks[1:])
    dls = {g.degree_list() for g in trio}
    ok = not failed and checked > 0 and same and len(dls) == 3
    return ok, f"{checked} instances, failures {failed}; sharpness trio equal={same}, distinct degree lists={len(dls)}"


def spider_pairs(**_) -> tuple[bool, str]:
    res = {k: verify_construction(FamilySpec("spider_pair", (k,))).ok for k in range(3, 8)}
    return all(res.values()), str(res)


def star_forests(**_) -> tuple[bool, str]:
    out = {}
    for k in (3, 4):
        spec = FamilySpec("manvel_stars", (k,))
        out[k] = (verify_construction(spec).ok, max_degree_pair(spec))
    ok = all(v and dg == (k, k - 1) for k, (v, dg) in out.items())
    return ok, str(out)


def degree_lists(**kw) -> tuple[bool, str]:
    checked, bad = 0, []
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            for k in range(g.max_degree + 2, n + 1):
                checked += 1
                try:
                    dl = degree_list_from_deck(compute_deck(g, k))
                except DegreeListError as e:
                    bad.append((write_graph6(g), k, str(e)))
                    continue
                if dl.degrees != g.degree_list():
                    bad.append((write_graph6(g), k, dl.degrees))
    rep = same_deck_classes(7, 4, jobs=kw.get("jobs", 1))
    split = [cls for cls in rep.classes if len({parse_graph6(s).degree_list() for s in cls}) > 1]
    ok = not bad and not split
    return ok, f"{checked} (graph, k) pairs, {len(bad)} wrong; 4-deck classes at n=7 with unequal degree lists: {len(split)}"


def _partitions(n: int, r: int, top: int | None = None):
    top = n if top is None else top
    if r == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, top), 0, -1):
        for rest in _partitions(n - first, r - 1, first):
            yield (first,) + rest


def multipartite(**_) -> tuple[bool, str]:
    checked, bad = 0, []
    for n in range(1, 13):
        for r in range(1, 5):
            for parts in _partitions(n, r):
                checked += 1
                g = complete_multipartite(*parts)
                k = min(r + 1, n)
                try:
                    got = reconstruct_complete_multipartite(compute_deck(g, k)).parts
                except ReconstructionError as e:
                    got = str(e)
                if got != parts:
                    bad.append((parts, got))
    a = compute_deck(complete_multipartite(7, 4, 3), 3)
    b = compute_deck(complete_multipartite(6, 6, 1, 1), 3)
    try:
        reconstruct_complete_multipartite(a)
        refused = False
    except ReconstructionError:
        refused = True
    ok = not bad and decks_equal(a, b) and refused
    return ok, f"{checked} part vectors, {len(bad)} wrong; 3-deck of K_(7,4,3) ambiguous={decks_equal(a, b)}, refused={refused}"


def disconnected(**_) -> tuple[bool, str]:
    checked, bad = 0, []
    for n in range(3, 9):
        for g in enumerate_graphs(n):
            comps = g.components()
            if max(len(c) for c in comps) > n - 2:
                continue
            checked += 1
            try:
                got = reconstruct_components(compute_deck(g, n - 2))
            except ReconstructionError as e:
                bad.append((write_graph6(g), str(e)))
                continue
            want: dict[bytes, int] = {}
            for c in comps:
                code = canonical_form(induced_subgraph(g, c))
                want[code] = want.get(code, 0) + 1
            if got != want:
                bad.append(write_graph6(g))
    return checked > 0 and not bad, f"{checked} graphs, {len(bad)} wrong"


def cubic_bridge_graph() -> Graph:
    """Two copies of K_4 with one edge subdivided, joined at the subdivision vertices."""
    half = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    edges = half + [(a + 5, b + 5) for a, b in half] + [(4, 9)]
    return make_graph(10, edges)


def regular_cutvertex(**_) -> tuple[bool, str]:
    g = cubic_bridge_graph()
    h = reconstruct_regular_cutvertex(compute_deck(g, 6), 3)
    two_k4 = disjoint_union(complete(4), complete(4))
    h2 = reconstruct_regular_cutvertex(compute_deck(two_k4, 4), 3)
    a = canonical_form(h) == canonical_form(g)
    b = canonical_form(h2) == canonical_form(two_k4)
    return a and b, f"bridge graph={a}, 2K_4={b}"


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _brute_induced(g: Graph, f: Graph) -> int:
    target = canonical_form(f)
    return sum(canonical_form(induced_subgraph(g, s)) == target for s in combinations(range(g.n), f.n))


def union_identity_holds(g: Graph, ell: int) -> bool:
    """D_{n-1}(G + (ell-1)K_1) as a union of decks of G padded with isolated vertices."""
    n = g.n
    lhs = compute_deck(disjoint_union(g, empty_graph(ell - 1)), n - 1)
    parts = []
    for i in range(1, ell + 1):
        mult = comb(ell - 1, ell - i)
        if n == i:
            # every card vertex is one of the added isolated ones
            parts.append({canonical_form(empty_graph(i - 1)): mult})
            continue
        d = compute_deck(g, n - i)
        padded: dict[bytes, int] = {}
        for code, c in d.cards.items():
            card = graph_from_code(code)
            pc = canonical_form(disjoint_union(card, empty_graph(i - 1)) if i > 1 else card)
            padded[pc] = padded.get(pc, 0) + mult * c
        parts.append(padded)
    return deck_union(parts) == dict(lhs.cards)


def deck_algebra(seed: int = 0, trials: int = 100, **_) -> tuple[bool, str]:
    rng = random.Random(seed)
    fails = {"derive": 0, "complement": 0, "counting": 0, "union": 0}
    for _ in range(trials):
        n = rng.randint(3, 8)
        g = _random_graph(rng, n)
        k = rng.randint(2, n)
        d = compute_deck(g, k)
        fails["derive"] += not decks_equal(derive_subdeck(d), compute_deck(g, k - 1))
        fails["complement"] += not decks_equal(deck_complement(d), compute_deck(complement(g), k))
        f = _random_graph(rng, rng.randint(1, k))
        fails["counting"] += count_induced(d, f) != _brute_induced(g, f)
        m = rng.randint(3, 6)
        while True:
            h = _random_graph(rng, m, 0.6)
            if h.is_connected():
                break
        fails["union"] += not union_identity_holds(h, rng.randint(2, min(3, 9 - m)))
    return not any(fails.values()), f"{trials} seeded graphs (seed {seed}); failures {fails}"


def common_cards(**_) -> tuple[bool, str]:
    out = {}
    for t in range(2, 6):
        a = compute_deck(complete_multipartite(t, t), 2 * t - 1)
        b = compute_deck(complete_multipartite(t + 1, t - 1), 2 * t - 1)
        out[t] = deck_common(a, b).total()
    return all(v == t + 1 for t, v in out.items()), f"common totals {out}"


def cycle_max_recon(**kw) -> tuple[bool, str]:
    got = {n: max_reconstructibility(cycle(n), checkpoint_dir=kw.get("checkpoint_dir")) for n in range(5, 10)}
    want = {n: (n + 1) // 2 for n in got}
    return got == want, f"got {got}, expected {want}"


CRITERIA = [
    Criterion(1, "3-deck census of K_(7,4,3) and K_(6,6,1,1)", 1, multipartite_census),
    Criterion(2, "5-vertex exceptional pairs", 5, small_exceptional),
    Criterion(3, "2-reconstructibility for n = 6..8", 600, two_recon_window),
    Criterion(4, "three 7-vertex pairs with equal 4-decks", 120, seven_vertex_pairs),
    Criterion(5, "two-component identities sweep", 60, twocomp_sweep),
    Criterion(6, "spider pairs k = 3..7", 60, spider_pairs),
    Criterion(7, "star forests k = 3, 4", 60, star_forests),
    Criterion(8, "degree lists from decks", 900, degree_lists),
    Criterion(9, "complete multipartite roundtrip", 120, multipartite),
    Criterion(10, "disconnected graph roundtrip", 1200, disconnected),
    Criterion(11, "regular graphs with a cut vertex", 300, regular_cutvertex),
    Criterion(12, "deck algebra properties", 300, deck_algebra),
    Criterion(13, "common cards of K_(t,t) and K_(t+1,t-1)", 60, common_cards),
    Criterion(14, "maximum reconstructibility of cycles", 14400, cycle_max_recon),
]


def run_criterion(c: Criterion, **kw) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = c.run(**kw)
    except Exception as e:  # a crash is a failed check, reported with its message
        ok, detail = False, f"error: {type(e).__name__}: {e}"
    elapsed = time.perf_counter() - t0
    if ok and elapsed > c.budget:
        ok, detail = False, f"{detail}; over budget ({elapsed:.1f}s > {c.budget:.0f}s)"
    return CheckResult(ok, detail, elapsed)


def format_line(c: Criterion, r: CheckResult) -> str:
    return f"[{'PASS' if r.ok else 'FAIL'}] {c.number:2d} {c.title}: {r.detail} ({r.elapsed:.2f}s)"
