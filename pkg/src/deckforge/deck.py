"""k-decks: construction, comparison, derivation and induced-subgraph counting."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, NamedTuple

from .cards import card_counts, fast_code
from .graph import Graph, code_bytes, complement, graph_from_code
from .graph6 import parse_graph6, write_graph6


class DeckError(ValueError):
    pass


@dataclass(frozen=True)
class Deck:
    """Multiset of k-cards of an n-vertex graph, keyed by canonical code."""

    n: int
    k: int
    cards: Mapping[bytes, int]

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise DeckError(f"card size {self.k} outside [1, {self.n}]")
        if any(c <= 0 for c in self.cards.values()):
            raise DeckError("card counts must be positive")

    @property
    def ell(self) -> int:
        return self.n - self.k

    def total(self) -> int:
        return sum(self.cards.values())

    def items(self) -> list[tuple[bytes, int]]:
        return sorted(self.cards.items())

    def serialize(self) -> bytes:
        parts = [self.n.to_bytes(2, "big"), self.k.to_bytes(2, "big")]
        for code, count in self.items():
            parts += [len(code).to_bytes(2, "big"), code, count.to_bytes(8, "big")]
        return b"".join(parts)

    def fingerprint(self) -> str:
        """128-bit content hash of the sorted serialized deck."""
        return hashlib.blake2b(self.serialize(), digest_size=16).hexdigest()

    def count_of(self, g: Graph) -> int:
        return self.cards.get(fast_code(g), 0)

    def __repr__(self) -> str:
        body = ", ".join(f"{write_graph6(graph_from_code(c))}:{m}" for c, m in self.items())
        return f"Deck(n={self.n}, k={self.k}, {{{body}}})"


def compute_deck(g: Graph, k: int) -> Deck:
    if not 1 <= k <= g.n:
        raise DeckError(f"card size {k} outside [1, {g.n}]")
    cards = {code_bytes(k, bits): c for bits, c in card_counts(g, k).items()}
    return Deck(g.n, k, cards)


def decks_equal(d1: Deck, d2: Deck) -> bool:
    return d1.n == d2.n and d1.k == d2.k and dict(d1.cards) == dict(d2.cards)


@lru_cache(maxsize=1 << 16)
def card_census(code: bytes, p: int) -> dict[bytes, int]:
    """The p-deck of a single card, cached by the card's code."""
    return dict(compute_deck(graph_from_code(code), p).cards)


def _aggregate(d: Deck, p: int) -> dict[bytes, int]:
    out: dict[bytes, int] = {}
    for code, count in d.cards.items():
        for sub, c in card_census(code, p).items():
            out[sub] = out.get(sub, 0) + count * c
    return out


def derive_subdeck(d: Deck) -> Deck:
    """The (k-1)-deck; every (k-1)-card lies in exactly n-k+1 of the k-cards."""
    if d.k < 2:
        raise DeckError("cannot derive below card size 1")
    div = d.n - d.k + 1
    out = {}
    for code, t in _aggregate(d, d.k - 1).items():
        q, r = divmod(t, div)
        if r:
            raise DeckError(f"level {d.k - 1}: aggregate count {t} not divisible by {div}")
        out[code] = q
    return Deck(d.n, d.k - 1, out)


def subdeck(d: Deck, j: int) -> Deck:
    """Derive the j-deck for ``j <= k`` by repeated derivation."""
    if not 1 <= j <= d.k:
        raise DeckError(f"cannot derive a {j}-deck from a {d.k}-deck")
    while d.k > j:
        d = derive_subdeck(d)
    return d


def deck_complement(d: Deck) -> Deck:
    out: dict[bytes, int] = {}
    for code, c in d.cards.items():
        cc = fast_code(complement(graph_from_code(code)))
        out[cc] = out.get(cc, 0) + c
    return Deck(d.n, d.k, out)


def count_induced(d: Deck, f: Graph) -> int:
    """s_F(G): induced copies of ``f`` in the host, from the deck alone."""
    p = f.n
    if p > d.k:
        raise DeckError(f"pattern has {p} vertices but cards have {d.k}")
    target = fast_code(f)
    t = 0
    for code, count in d.cards.items():
        t += count * card_census(code, p).get(target, 0)
    div = comb(d.n - p, d.ell)
    q, r = divmod(t, div)
    if r:
        raise DeckError(f"appearance total {t} not divisible by C({d.n - p},{d.ell}) = {div}")
    return q


def induced_census(d: Deck) -> dict[bytes, int]:
    """s_F for every F on at most k vertices that occurs at all."""
    out: dict[bytes, int] = {}
    for p in range(1, d.k + 1):
        div = comb(d.n - p, d.ell)
        for code, t in _aggregate(d, p).items():
            q, r = divmod(t, div)
            if r:
                raise DeckError(f"appearance total {t} at size {p} not divisible by {div}")
            out[code] = q
    return out


def deck_common(d1: Deck, d2: Deck) -> Deck:
    """Multiset intersection of two decks with the same card size."""
    if d1.k != d2.k:
        raise DeckError("decks have different card sizes")
    cards = {c: min(m, d2.cards[c]) for c, m in d1.cards.items() if c in d2.cards}
    return Deck(d1.n, d1.k, cards)


def deck_union(decks: Iterable[Mapping[bytes, int]]) -> dict[bytes, int]:
    out: dict[bytes, int] = {}
    for d in decks:
        for c, m in d.items():
            out[c] = out.get(c, 0) + m
    return out


class DeckCheck(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def validate_deck(d: Deck) -> DeckCheck:
    if d.total() != comb(d.n, d.k):
        return DeckCheck(False, f"total count {d.total()} != C({d.n},{d.k}) = {comb(d.n, d.k)}")
    for code in d.cards:
        if code[0] != d.k:
            return DeckCheck(False, f"card with {code[0]} vertices in a {d.k}-deck")
    cur = d
    while cur.k > 1:
        try:
            cur = derive_subdeck(cur)
        except DeckError as e:
            return DeckCheck(False, str(e))
    return DeckCheck(True, "ok")


# ------------------------------------------------------------------ JSON

def deck_to_json(d: Deck) -> dict:
    cards = [{"g6": write_graph6(graph_from_code(c)), "count": m} for c, m in d.cards.items()]
    cards.sort(key=lambda r: r["g6"])
    return {"n": d.n, "k": d.k, "cards": cards}


def deck_from_json(obj: dict) -> Deck:
    try:
        n, k = int(obj["n"]), int(obj["k"])
        cards: dict[bytes, int] = {}
        for rec in obj["cards"]:
            g = parse_graph6(rec["g6"])
            if g.n != k:
                raise DeckError(f"card {rec['g6']!r} has {g.n} vertices, expected {k}")
            code = fast_code(g)
            cards[code] = cards.get(code, 0) + int(rec["count"])
    except (KeyError, TypeError) as e:
        raise DeckError(f"malformed deck JSON: {e}") from e
    return Deck(n, k, cards)


def dump_deck(d: Deck) -> str:
    return json.dumps(deck_to_json(d), sort_keys=True)


def load_deck(text: str) -> Deck:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DeckError(f"invalid JSON: {e}") from e
    return deck_from_json(obj)
