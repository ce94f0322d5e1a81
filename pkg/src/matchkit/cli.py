"""Command-line interface.

Subcommands: count, enumerate, minimal, reduce, classify, chords, chambers,
search, verify.  Graphs are read in mg-v1 format from a path or standard
input ("-").  Exit codes: 0 success, 1 domain error, 2 usage error, 3
resource-guard abort.  With --format json every error is also emitted as a
one-line JSON object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alternating import OrientedCycle, chambers, chords_cross, find_chords
from .family import (
    DEFAULT_GUARD,
    SearchConfig,
    classify,
    search_family,
)
from .generate import ResourceGuardExceeded
from .matching import (
    PerfectMatching,
    count_matchings,
    enumerate_matchings,
    is_minimally_k_matchable,
    is_perfect_matching,
)
from .multigraph import Multigraph, MgFormatError, parse_graph
from .reduction import reduce as reduce_graph
from .verify import run_suite

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

_DEFAULT_MAX_VERTICES = {1: 6, 2: 6, 3: 6, 4: 10}


def _read_graph(path: str) -> Multigraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(path).read_text())


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj))
    else:
        for key, value in obj.items():
            print(f"{key}: {value}")


def _parse_int_list(text: str, what: str) -> list[int]:
    if text.strip() == "":
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"could not parse {what}: {text!r}") from None


def _resolve_cycle(g: Multigraph, verts: list[int], m_ids: set[int]) -> OrientedCycle:
    """Choose concrete cycle edges for a vertex sequence.

    With parallel edges the choice matters for alternation, so both phases
    (matched edges at even or at odd positions) are tried; within a phase the
    lowest unused edge id fitting the required membership is taken.
    """
    L = len(verts)
    if L < 2:
        raise ValueError("cycle needs at least two vertices")
    by_pair: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        by_pair.setdefault((e.u, e.v), []).append(e.id)
    for ids in by_pair.values():
        ids.sort()
    for phase in (0, 1):
        edges: list[int] = []
        used: set[int] = set()
        ok = True
        for i in range(L):
            u, v = verts[i], verts[(i + 1) % L]
            want_m = i % 2 == phase
            cands = [
                eid
                for eid in by_pair.get((min(u, v), max(u, v)), [])
                if eid not in used and (eid in m_ids) == want_m
            ]
            if not cands:
                ok = False
                break
            edges.append(cands[0])
            used.add(cands[0])
        if ok:
            return OrientedCycle(tuple(verts), tuple(edges))
    raise ValueError("no alternating edge assignment exists for this vertex cycle")


def _cmd_count(args) -> dict:
    g = _read_graph(args.input)
    if args.cap is not None:
        return {"count": count_matchings(g, cap=args.cap), "cap": args.cap}
    return {"count": count_matchings(g)}


def _cmd_enumerate(args) -> dict:
    g = _read_graph(args.input)
    ms = enumerate_matchings(g, limit=args.limit)
    return {
        "count": len(ms),
        "exhaustive": ms.exhaustive,
        "matchings": [m.sorted_ids() for m in ms.matchings],
    }


def _cmd_minimal(args) -> dict:
    g = _read_graph(args.input)
    v = is_minimally_k_matchable(g, args.k)
    return {
        "k": args.k,
        "is_k_matchable": v.is_k_matchable,
        "is_minimal": v.is_minimal,
        "witness_edge": v.witness_edge,
        "count": v.count,
    }


def _cmd_reduce(args) -> dict:
    g = _read_graph(args.input)
    return reduce_graph(g).to_json_dict()


def _cmd_classify(args) -> dict:
    g = _read_graph(args.input)
    return classify(g, args.k).to_json_dict()


def _cmd_chords(args) -> dict:
    g = _read_graph(args.input)
    verts = _parse_int_list(args.cycle, "--cycle")
    m_ids = set(_parse_int_list(args.m, "--m"))
    n_ids = set(_parse_int_list(args.n, "--n"))
    f_ids = set(_parse_int_list(args.f, "--f")) if args.f else set()
    for eid in m_ids | n_ids | f_ids:
        g.edge(eid)  # raise early on unknown ids
    if not is_perfect_matching(g, m_ids):
        raise ValueError("--m is not a perfect matching of the graph")
    cycle = _resolve_cycle(g, verts, m_ids)
    found = find_chords(g, cycle, PerfectMatching(frozenset(m_ids)), n_ids, f_ids)
    crossings = [
        [i, j]
        for i in range(len(found))
        for j in range(i + 1, len(found))
        if chords_cross(cycle, found[i], found[j])
    ]
    return {
        "cycle_vertices": list(cycle.vertices),
        "cycle_edges": list(cycle.edges),
        "chords": [ch.to_json_dict() for ch in found],
        "crossings": crossings,
    }


def _cmd_chambers(args) -> dict:
    g = _read_graph(args.input)
    return {"chambers": [list(c) for c in chambers(g)]}


def _cmd_search(args) -> dict:
    max_vertices = args.max_vertices
    if max_vertices is None:
        max_vertices = _DEFAULT_MAX_VERTICES.get(args.k)
        if max_vertices is None:
            raise ValueError(f"no default --max-vertices for k={args.k}; pass one explicitly")
    cfg = SearchConfig(
        k=args.k,
        max_vertices=max_vertices,
        max_multiplicity=args.max_multiplicity,
        worker_count=args.jobs,
        guard=args.guard,
    )
    report = search_family(cfg)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for member in report.members:
            (out / f"{member.short_hash()}.mg").write_text(
                member.canonical.serialization.decode("ascii")
            )
        (out / "report.json").write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    return report.to_json_dict()


def _cmd_verify(args) -> dict:
    kw = {
        "k": args.k,
        "max_vertices": args.max_vertices,
        "jobs": args.jobs,
        "guard": args.guard,
    }
    if args.trials is not None:
        kw["trials"] = args.trials
    if args.seed is not None:
        kw["seed"] = args.seed
    if args.suite in ("lemma1", "lemma2", "claims") and args.k is None:
        raise ValueError(f"--k is required for suite {args.suite}")
    if args.suite in ("lemma1", "claims") and args.max_vertices is None:
        kw["max_vertices"] = 8
    if args.suite == "oracle" and args.max_vertices is None:
        kw["max_vertices"] = 5
    result = run_suite(args.suite, **kw)
    return result.to_json_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchkit",
        description="perfect-matching analysis of loopless multigraphs (mg-v1 input)",
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="output format (default json; text is human-oriented, not stable)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="mg-v1 file or - for stdin")

    p = sub.add_parser("count", help="number of perfect matchings")
    add_input(p)
    p.add_argument("--cap", type=int, help="stop counting at this many")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list perfect matchings (edge ids)")
    add_input(p)
    p.add_argument("--limit", type=int, help="return at most this many")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("minimal", help="minimally k-matchable verdict")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("reduce", help="smooth and strip to the irreducible base")
    add_input(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("classify", help="verdict plus reduction base and family name")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("chords", help="chord report for an alternating cycle")
    add_input(p)
    p.add_argument("--cycle", required=True, help="cycle vertices, e.g. 0,1,2,3")
    p.add_argument("--m", required=True, help="edge ids of the perfect matching m")
    p.add_argument("--n", required=True, help="edge ids of the matching n")
    p.add_argument("--f", help="edge ids marking external chords")
    p.set_defaults(func=_cmd_chords)

    p = sub.add_parser("chambers", help="components of the union of all matchings")
    add_input(p)
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("search", help="exhaustive base-family search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-vertices", type=int, help="even bound (defaults: k<=3 -> 6, k=4 -> 10)")
    p.add_argument("--max-multiplicity", type=int, help="per-pair cap (default k)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                   help="abort after this many generated graphs (exit 3)")
    p.add_argument("--out-dir", help="also write member .mg files and report.json here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=("lemma1", "lemma2", "oracle", "claims"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--guard", type=int)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ResourceGuardExceeded as exc:
        _emit_error(str(exc), args.format)
        return EXIT_GUARD
    except (MgFormatError, ValueError, OSError) as exc:
        _emit_error(str(exc), args.format)
        return EXIT_DOMAIN
    _emit(result, args.format)
    if args.command == "verify" and not result.get("passed", True):
        return EXIT_DOMAIN
    return EXIT_OK


def _emit_error(message: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"error": message}))
    else:
        print(f"error: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
