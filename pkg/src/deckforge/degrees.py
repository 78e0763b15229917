"""Degree lists from k-decks by exact back-substitution, and a sufficient-order bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

import mpmath

from .deck import Deck
from .graph import graph_from_code


class DegreeListError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeList:
    """``counts[i]`` vertices of degree ``i``, for ``i = 0..n-1``."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def degrees(self) -> tuple[int, ...]:
        out: list[int] = []
        for i in reversed(range(len(self.counts))):
            out += [i] * self.counts[i]
        return tuple(out)

    @classmethod
    def from_degrees(cls, degrees, n: int | None = None) -> "DegreeList":
        n = len(degrees) if n is None else n
        counts = [0] * n
        for d in degrees:
            counts[d] += 1
        return cls(tuple(counts))


def _card_degree_counts(code: bytes) -> list[int]:
    g = graph_from_code(code)
    out = [0] * g.n
    for d in g.degrees():
        out[d] += 1
    return out


def degree_profile_sums(d: Deck) -> list[int]:
    """S_j: vertices of degree j summed over all cards, for j = 0..k-1."""
    s = [0] * d.k
    for code, count in d.cards.items():
        for j, c in enumerate(_card_degree_counts(code)):
            s[j] += count * c
    return s


def profile_coefficient(n: int, k: int, i: int, j: int) -> int:
    """How many k-cards show a fixed degree-i vertex with degree j."""
    return comb(i, j) * comb(n - 1 - i, k - 1 - j)


def solve_degree_list(d: Deck, known_high: Mapping[int, int] | None = None) -> DegreeList:
    """Back-substitute a_{k-1}, ..., a_0 from the degree-sum profile.

    ``known_high`` gives a_i for i >= k (missing entries are zero).  Entries
    below k, if supplied, are checked against the solution instead.
    """
    n, k = d.n, d.k
    known = dict(known_high or {})
    if any(i < 0 or i >= n or v < 0 for i, v in known.items()):
        raise DegreeListError("known degree counts out of range")
    a = [0] * n
    for i in range(k, n):
        a[i] = known.get(i, 0)
    s = degree_profile_sums(d)
    for j in range(k - 1, -1, -1):
        rest = sum(a[i] * profile_coefficient(n, k, i, j) for i in range(j + 1, min(j + n - k, n - 1) + 1))
        lead = profile_coefficient(n, k, j, j)
        q, r = divmod(s[j] - rest, lead)
        if r or q < 0:
            raise DegreeListError(f"degree {j}: ({s[j]} - {rest}) / {lead} is not a nonnegative integer")
        a[j] = q
    for i, v in known.items():
        if i < k and a[i] != v:
            raise DegreeListError(f"degree {i}: solved {a[i]} but {v} was asserted")
    if sum(a) != n:
        raise DegreeListError(f"degree counts sum to {sum(a)}, not {n}")
    if sum(i * c for i, c in enumerate(a)) % 2:
        raise DegreeListError("degree sum is odd")
    return DegreeList(tuple(a))


def observed_max_degree(d: Deck) -> int:
    return max(max(graph_from_code(c).degrees()) for c in d.cards)


def degree_list_from_deck(d: Deck) -> DegreeList:
    """Degree list from a deck whose cards have at least Delta+2 vertices."""
    delta = observed_max_degree(d)
    if d.k < delta + 2:
        raise DegreeListError(
            f"cards of size {d.k} cannot certify the degree list: max card degree {delta} needs k >= {delta + 2}"
        )
    return solve_degree_list(d, {})


def taylor_threshold(ell: int, dps: int = 50) -> mpmath.mpf:
    """g(ell) = (ell - ln ell + 1)(e + (e ln ell + e + 1)/((ell-1) ln ell - 1)) + 1."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    with mpmath.workdps(dps):
        L = mpmath.log(ell)
        den = (ell - 1) * L - 1
        if den <= 0:
            raise ValueError(f"(ell-1) ln ell - 1 = {mpmath.nstr(den, 8)} is not positive")
        e = mpmath.e
        return +((ell - L + 1) * (e + (e * L + e + 1) / den) + 1)
