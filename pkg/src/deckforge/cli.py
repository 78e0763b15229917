"""Command-line interface: ``deckforge <command> [flags]``.

Exit codes: 0 success, 1 a requested check or reconstruction failed,
2 usage error, 3 malformed graph6 or deck JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import FAMILIES, FamilyError, FamilySpec, same_deck_pair, verify_construction
from .deck import DeckError, compute_deck, decks_equal, dump_deck, load_deck
from .degrees import DegreeListError, degree_list_from_deck, solve_degree_list
from .graph import GraphError, canonical_relabel, graph_from_code
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .reconstruct import (
    ReconstructionError,
    graph_from_components,
    reconstruct_clique_union,
    reconstruct_complete_multipartite,
    reconstruct_components,
    reconstruct_regular_cutvertex,
)
from .search import SearchError, max_reconstructibility, same_deck_classes
from .verify import CRITERIA, format_line, run_criterion

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class DataError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise DataError(f"cannot read {path}: {e}") from e


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_graph(path: str):
    lines = [ln for ln in _read(path).splitlines() if ln.strip()]
    if not lines:
        raise DataError(f"{path}: no graph6 line")
    return parse_graph6(lines[0].strip())


def _g6(g) -> str:
    return write_graph6(canonical_relabel(g))


# ------------------------------------------------------------- commands

def cmd_deck(a) -> int:
    g = _read_graph(a.input)
    _write(a.out, dump_deck(compute_deck(g, a.k)) + "\n")
    return EXIT_OK


def cmd_compare(a) -> int:
    d1, d2 = load_deck(_read(a.a)), load_deck(_read(a.b))
    if decks_equal(d1, d2):
        print("EQUAL")
        return EXIT_OK
    print(f"DIFFERENT (n={d1.n},{d2.n} k={d1.k},{d2.k} distinct cards={len(d1.cards)},{len(d2.cards)})")
    return EXIT_FAIL


def _known(pairs: list[str]) -> dict[int, int]:
    out = {}
    for p in pairs:
        i, _, c = p.partition("=")
        try:
            out[int(i)] = int(c)
        except ValueError:
            raise argparse.ArgumentTypeError(f"--known expects DEGREE=COUNT, got {p!r}")
    return out


def cmd_degrees(a) -> int:
    d = load_deck(_read(a.input))
    dl = solve_degree_list(d, _known(a.known)) if a.known else degree_list_from_deck(d)
    print(" ".join(map(str, dl.degrees)))
    return EXIT_OK


def cmd_multipartite(a) -> int:
    d = load_deck(_read(a.input))
    ps = reconstruct_clique_union(d) if a.clique_union else reconstruct_complete_multipartite(d)
    print(" ".join(map(str, ps.parts)))
    return EXIT_OK


def cmd_components(a) -> int:
    comps = reconstruct_components(load_deck(_read(a.input)))
    for code, c in comps.items():
        print(f"{write_graph6(graph_from_code(code))} {c}")
    if a.out:
        _write(a.out, _g6(graph_from_components(comps)) + "\n")
    return EXIT_OK


def cmd_regular(a) -> int:
    g = reconstruct_regular_cutvertex(load_deck(_read(a.input)), a.r)
    _write(a.out, _g6(g) + "\n")
    return EXIT_OK


def cmd_family(a) -> int:
    spec = FamilySpec(a.name, tuple(a.params))
    g, h, k = same_deck_pair(spec)
    print(_g6(g))
    print(_g6(h))
    print(f"k={k}")
    if a.verify:
        v = verify_construction(spec)
        print(f"{'verified' if v else 'NOT verified'}: {v.reason}")
        return EXIT_OK if v else EXIT_FAIL
    return EXIT_OK


def cmd_search(a) -> int:
    rep = same_deck_classes(a.n, a.k, jobs=a.jobs, checkpoint_dir=a.checkpoint_dir, resume=a.resume)
    _write(a.out, rep.to_jsonl())
    print(f"n={rep.n} k={rep.k}: {len(rep.classes)} classes among {rep.graphs_enumerated} graphs "
          f"({rep.elapsed:.1f}s)", file=sys.stderr)
    return EXIT_OK


def cmd_maxrecon(a) -> int:
    g = _read_graph(a.input)
    print(max_reconstructibility(g, checkpoint_dir=a.checkpoint_dir, jobs=a.jobs))
    return EXIT_OK


def cmd_verify(a) -> int:
    ok = True
    for c in CRITERIA:
        if a.only and c.number not in a.only:
            continue
        r = run_criterion(c, jobs=a.jobs, seed=a.seed, stretch=a.stretch, checkpoint_dir=a.checkpoint_dir)
        print(format_line(c, r), flush=True)
        ok &= r.ok
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deckforge", description="k-deck computation, reconstruction and search")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, jobs=False):
        sp.add_argument("--seed", type=int, default=0, help="seed for randomised checks (default 0)")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")
            sp.add_argument("--checkpoint-dir", default=None,
                            help="checkpoint directory (default: $DECKFORGE_CACHE, else none)")

    s = sub.add_parser("deck", help="write the k-deck of a graph as JSON")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--in", dest="input", required=True, help="graph6 file ('-' for stdin)")
    s.add_argument("--out", default=None)
    common(s)
    s.set_defaults(func=cmd_deck)

    s = sub.add_parser("compare", help="compare two deck JSON files")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    common(s)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("reconstruct-degrees", help="degree list from a deck")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--known", nargs="*", default=[], metavar="DEG=COUNT",
                   help="counts of vertices with degree >= k (unlisted are zero); "
                        "without it the cards must have at least max degree + 2 vertices")
    common(s)
    s.set_defaults(func=cmd_degrees)

    s = sub.add_parser("reconstruct-multipartite", help="part sizes of a complete multipartite graph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--clique-union", action="store_true", help="treat the deck as one of a disjoint union of cliques")
    common(s)
    s.set_defaults(func=cmd_multipartite)

    s = sub.add_parser("reconstruct-components", help="component multiset of a disconnected graph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out", default=None, help="also write the whole graph as graph6")
    common(s)
    s.set_defaults(func=cmd_components)

    s = sub.add_parser("reconstruct-regular", help="r-regular graph with a cut vertex (or disconnected)")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--out", default=None)
    common(s)
    s.set_defaults(func=cmd_regular)

    s = sub.add_parser("gen-family", help="emit a same-deck pair from a named family")
    s.add_argument("name", choices=FAMILIES)
    s.add_argument("--params", type=int, nargs="*", default=[])
    s.add_argument("--verify", action="store_true", help="also check the deck claim exactly")
    common(s)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("search-pairs", help="all classes of n-vertex graphs sharing a k-deck (JSON Lines)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out", default=None)
    s.add_argument("--resume", action="store_true", help="reuse fingerprint checkpoints from an earlier run")
    common(s, jobs=True)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("max-recon", help="maximum reconstructibility of a graph (n <= 9)")
    s.add_argument("--in", dest="input", required=True)
    common(s, jobs=True)
    s.set_defaults(func=cmd_maxrecon)

    s = sub.add_parser("verify-paper", help="run the acceptance checks and print a table")
    s.add_argument("--only", type=int, nargs="*", default=None, help="criterion numbers to run")
    s.add_argument("--stretch", action="store_true", help="include the n = 9 window search")
    common(s, jobs=True)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except (Graph6Error, DeckError, DataError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    except (ReconstructionError, DegreeListError) as e:
        print(f"failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (FamilyError, SearchError, GraphError, argparse.ArgumentTypeError) as e:
        print(f"usage: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
