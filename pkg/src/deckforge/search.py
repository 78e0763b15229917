"""Exhaustive enumeration and same-deck searches over all small graphs.

Graphs are generated level by level: every graph on n vertices arises from
one on n-1 vertices by adding a vertex of minimum degree, so children are
restricted to neighbour sets no larger than the child's minimum degree and
deduplicated by canonical code.  Levels are cached as graph6 files when a
checkpoint directory is given.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .cards import TABLE_MAX_K, bits_matrix, canonical_bits, card_code_matrix
from .deck import Deck, compute_deck, decks_equal
from .graph import Graph, automorphism_count, code_bytes, graph_from_code, induced_subgraph
from .graph6 import parse_graph6, write_graph6

ENUM_MAX_N = 10
MAXRECON_MAX_N = 9
DISTINGUISH_MAX_N = 12
CHUNK = 4096


class SearchError(ValueError):
    pass


def cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    """Checkpoint directory: the explicit argument, else ``$DECKFORGE_CACHE``."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get("DECKFORGE_CACHE")
    return Path(env) if env else None


# ------------------------------------------------------------- enumeration

def _children(parent_codes: list[bytes], n: int, max_edges: int | None, exact_edges: int | None) -> set[bytes]:
    out: set[bytes] = set()
    for pc in parent_codes:
        p = graph_from_code(pc)
        degs = p.degrees()
        sizes = range(n)
        if exact_edges is not None:
            sizes = [exact_edges - p.m] if 0 <= exact_edges - p.m < n else []
        for s in sizes:
            if max_edges is not None and p.m + s > max_edges:
                break
            for nbrs in combinations(range(n - 1), s):
                # the new vertex must have minimum degree in the child
                if s and min(degs[v] + (v in nbrs) for v in range(n - 1)) < s:
                    continue
                new = 0
                for v in nbrs:
                    new |= 1 << v
                adj = tuple(row | ((new >> v & 1) << (n - 1)) for v, row in enumerate(p.adj)) + (new,)
                g = Graph(n, adj)
                out.add(code_bytes(n, canonical_bits(n, g.to_mask())))
    return out


def _level(parents: list[bytes], n: int, max_edges, exact_edges, jobs: int) -> list[bytes]:
    chunks = [parents[i:i + CHUNK // 8 or 1] for i in range(0, len(parents), CHUNK // 8 or 1)]
    found: set[bytes] = set()
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_children, chunks, [n] * len(chunks), [max_edges] * len(chunks), [exact_edges] * len(chunks)):
                found |= part
    else:
        for c in chunks:
            found |= _children(c, n, max_edges, exact_edges)
    return sorted(found)


def _level_file(root: Path, n: int, max_edges, exact_edges) -> Path:
    tag = f"graphs-n{n}"
    if exact_edges is not None:
        tag += f"-m{exact_edges}"
    elif max_edges is not None:
        tag += f"-le{max_edges}"
    return root / f"{tag}.g6"


def enumerate_codes(n: int, edges: int | None = None, checkpoint_dir=None, jobs: int = 1) -> list[bytes]:
    """Canonical codes of all n-vertex graphs (with ``edges`` edges if given), sorted."""
    if not 1 <= n <= ENUM_MAX_N:
        raise SearchError(f"enumeration supports 1 <= n <= {ENUM_MAX_N}, got {n}")
    root = cache_dir(checkpoint_dir)
    level = [code_bytes(1, 0)]
    for i in range(2, n + 1):
        last = i == n
        max_edges = edges
        exact = edges if last else None
        f = _level_file(root, i, max_edges if not last else None, exact) if root else None
        if f is not None and f.exists():
            level = sorted(code_bytes(i, canonical_bits(i, g.to_mask()))
                           for g in map(parse_graph6, f.read_text().split()))
            continue
        level = _level(level, i, max_edges, exact, jobs)
        if f is not None:
            f.parent.mkdir(parents=True, exist_ok=True)
            tmp = f.with_suffix(".tmp")
            tmp.write_text("".join(write_graph6(graph_from_code(c)) + "\n" for c in level))
            tmp.replace(f)
    if n == 1 and edges not in (None, 0):
        return []
    return level


def enumerate_graphs(n: int, edges: int | None = None, checkpoint_dir=None, jobs: int = 1) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class."""
    for code in enumerate_codes(n, edges, checkpoint_dir, jobs):
        yield graph_from_code(code)


# ----------------------------------------------------------- deck classes

def _deck_keys(codes: list[bytes], n: int, k: int) -> list[bytes]:
    """A byte string per graph identifying its k-deck exactly (sorted card codes)."""
    if k <= TABLE_MAX_K and k < n:
        mat = card_code_matrix(bits_matrix([graph_from_code(c) for c in codes]), n, k)
        mat.sort(axis=1)
        return [row.tobytes() for row in mat]
    out = []
    for c in codes:
        d = compute_deck(graph_from_code(c), k)
        out.append(d.serialize())
    return out


def _fingerprints(codes: list[bytes], n: int, k: int) -> list[str]:
    return [hashlib.blake2b(key, digest_size=16).hexdigest() for key in _deck_keys(codes, n, k)]


@dataclass
class SearchReport:
    n: int
    k: int
    classes: list[list[str]]
    graphs_enumerated: int
    elapsed: float = field(default=0.0, compare=False)

    def records(self) -> Iterable[dict]:
        for i, cls in enumerate(self.classes):
            yield {"n": self.n, "k": self.k, "class": i, "graphs": cls}

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records())


def _progress_path(root: Path, n: int, k: int) -> Path:
    return root / f"fingerprints-n{n}-k{k}.jsonl"


def _load_progress(path: Path) -> dict[tuple[int, int], list[str]]:
    done = {}
    if path.exists():
        for line in path.read_text().splitlines():
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                break  # a torn final line from an interrupted run
            done[(rec["start"], rec["stop"])] = rec["fingerprints"]
    return done


def _fp_task(args):
    codes, n, k = args
    return _fingerprints(codes, n, k)


def same_deck_classes(n: int, k: int, jobs: int = 1, checkpoint_dir=None, resume: bool = True) -> SearchReport:
    """All classes of at least two n-vertex graphs sharing a k-deck."""
    if not 1 <= k <= n:
        raise SearchError(f"card size {k} outside [1, {n}]")
    t0 = time.perf_counter()
    root = cache_dir(checkpoint_dir)
    codes = enumerate_codes(n, checkpoint_dir=root, jobs=jobs)
    ranges = [(i, min(i + CHUNK, len(codes))) for i in range(0, len(codes), CHUNK)]
    prog = _progress_path(root, n, k) if root else None
    done = _load_progress(prog) if prog and resume else {}
    todo = [r for r in ranges if r not in done]
    results = dict(done)
    args = [(codes[a:b], n, k) for a, b in todo]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            computed = list(ex.map(_fp_task, args))
    else:
        computed = map(_fp_task, args)
    fh = None
    if prog is not None:
        prog.parent.mkdir(parents=True, exist_ok=True)
        fh = prog.open("a")
    try:
        for r, fps in zip(todo, computed):
            results[r] = fps
            if fh is not None:
                fh.write(json.dumps({"n": n, "k": k, "start": r[0], "stop": r[1], "fingerprints": fps}) + "\n")
                fh.flush()
    finally:
        if fh is not None:
            fh.close()
    groups: dict[str, list[bytes]] = {}
    for a, b in ranges:
        for code, fp in zip(codes[a:b], results[(a, b)]):
            groups.setdefault(fp, []).append(code)
    classes = []
    for members in groups.values():
        if len(members) > 1:
            classes += _confirm(members, k)
    classes = sorted(sorted(write_graph6(graph_from_code(c)) for c in cls) for cls in classes)
    return SearchReport(n, k, classes, len(codes), time.perf_counter() - t0)


def _confirm(members: list[bytes], k: int) -> list[list[bytes]]:
    """Split a fingerprint bucket into exact deck-equality classes of size >= 2."""
    decks = [(c, compute_deck(graph_from_code(c), k)) for c in members]
    out: list[list[tuple[bytes, Deck]]] = []
    for c, d in decks:
        for cls in out:
            if decks_equal(cls[0][1], d):
                cls.append((c, d))
                break
        else:
            out.append([(c, d)])
    return [[c for c, _ in cls] for cls in out if len(cls) > 1]


# ------------------------------------------------- maximum reconstructibility

def same_deck_mates(g: Graph, k: int, pool: list[bytes]) -> list[bytes]:
    """Members of ``pool`` (canonical codes) other than ``g`` with the same k-deck."""
    me = code_bytes(g.n, canonical_bits(g.n, g.to_mask()))
    target = compute_deck(g, k)
    others = [c for c in pool if c != me]
    if not others:
        return []
    keys = _deck_keys(others + [me], g.n, k)
    mine = keys[-1]
    hits = [c for c, key in zip(others, keys) if key == mine]
    return [c for c in hits if decks_equal(compute_deck(graph_from_code(c), k), target)]


def max_reconstructibility(g: Graph, checkpoint_dir=None, jobs: int = 1) -> int:
    """Largest ell such that no other n-vertex graph shares the (n-ell)-deck of ``g``.

    Every k-deck determines the smaller ones, so the rivals sharing the
    k-deck shrink as k grows; the answer is n minus the first k at which none
    remain.  Rivals for k >= 2 have the same edge count, which bounds the pool.
    """
    n = g.n
    if n > MAXRECON_MAX_N:
        raise SearchError(f"maximum reconstructibility is limited to n <= {MAXRECON_MAX_N}")
    if n == 1:
        return 0
    pool = enumerate_codes(n, edges=g.m, checkpoint_dir=checkpoint_dir, jobs=jobs)
    for k in range(2, n + 1):
        pool = same_deck_mates(g, k, pool)
        if not pool:
            return n - k
    raise AssertionError("the n-deck is the graph itself")  # pragma: no cover


# ------------------------------------------------ distinguishing hypothesis

def check_distinguishing(g: Graph, ell: int) -> bool:
    """Are all (n-ell-1)-vertex induced subgraphs asymmetric and pairwise non-isomorphic?"""
    k = g.n - ell - 1
    if ell < 1 or k < 1:
        raise SearchError("need ell >= 1 and n - ell - 1 >= 1")
    if g.n > DISTINGUISH_MAX_N:
        raise SearchError(f"limited to n <= {DISTINGUISH_MAX_N}")
    d = compute_deck(g, k)
    if any(c > 1 for c in d.cards.values()):
        return False
    return all(automorphism_count(graph_from_code(c)) == 1 for c in d.cards)


@dataclass(frozen=True)
class CardSelection:
    base: tuple[int, ...]
    deleted: tuple[tuple[int, ...], ...]
    cards: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.cards)

    def tally(self) -> dict[bytes, int]:
        out: dict[bytes, int] = {}
        for c in self.cards:
            out[c] = out.get(c, 0) + 1
        return out


def sw_card_multiset(g: Graph, base: Iterable[int], ell: int, outside: int | None = None) -> CardSelection:
    """C(ell+2, 2) cards of size n-ell chosen around a base set of ell+1 vertices.

    One card deletes each ell-subset of the base; for each pair u, v of the
    base, one more card deletes the rest of the base plus one vertex outside
    it (``outside``, defaulting to the lowest-numbered one).
    """
    base = list(base)
    s = tuple(sorted(set(base)))
    if ell <= 1:
        raise SearchError("the selection needs ell >= 2")
    if len(s) != len(base) or len(s) != ell + 1:
        raise SearchError(f"base set must have exactly {ell + 1} distinct vertices")
    if g.n < ell + 2:
        raise SearchError("need n >= ell + 2")
    if any(not 0 <= v < g.n for v in s):
        raise SearchError("base vertex out of range")
    rest = [v for v in range(g.n) if v not in s]
    w = rest[0] if outside is None else outside
    if w not in rest:
        raise SearchError(f"vertex {w} is not outside the base set")
    deleted = [tuple(x) for x in combinations(s, ell)]
    for u, v in combinations(s, 2):
        deleted.append(tuple(sorted([x for x in s if x not in (u, v)] + [w])))
    cards = []
    for dl in deleted:
        keep = [v for v in range(g.n) if v not in dl]
        h = induced_subgraph(g, keep)
        cards.append(code_bytes(h.n, canonical_bits(h.n, h.to_mask())))
    assert len(cards) == comb(ell + 2, 2)
    return CardSelection(s, tuple(deleted), tuple(cards))
