"""Property suites runnable from the CLI and reused by the test suite.

Four suites:
  lemma1  degree/count bounds on every minimally k-matchable graph in a
          bounded universe
  lemma2  randomized subdivision/K2-augmentation round trips (count
          invariance and classification stability)
  oracle  backtracking counter against the subset-enumeration oracle
  claims  the extra-edge intersection property relating a minimally
          k-matchable graph to its greedily thinned spanning subgraphs
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canon import canonical_form
from .family import classify, known_family_graphs
from .generate import GenerationStats, expand_subtree, split_frontier
from .matching import (
    brute_force_count,
    count_matchings,
    enumerate_matchings,
    is_minimally_k_matchable,
    lemma1_bound_check,
)
from .multigraph import Edge, Multigraph, empty_graph, serialize_graph
from .reduction import SubdivisionSpec, add_k2, reduce, subdivide_edge

MAX_REPORTED_VIOLATIONS = 25
_SPLIT_EDGES = 3


@dataclass
class SuiteResult:
    suite: str
    k: int | None
    checked: int
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "k": self.k,
            "checked": self.checked,
            "violations": len(self.violations),
            "violation_details": self.violations[:MAX_REPORTED_VIOLATIONS],
            "passed": self.passed,
            **self.info,
        }


# -- shared enumeration of minimally k-matchable graphs -------------------------


def _minimal_hunt_worker(args) -> tuple[dict, list[str]]:
    root, k, guard = args
    stats = GenerationStats()
    found: list[str] = []
    for g in expand_subtree(root, k, k, stats, guard=guard):
        if _quick_reject(g, k):
            continue
        if is_minimally_k_matchable(g, k).is_minimal:
            found.append(serialize_graph(g))
    return stats.to_dict(), found


def _quick_reject(g: Multigraph, k: int) -> bool:
    if g.vertex_count == 0 or g.vertex_count % 2 == 1:
        return True
    degs = g.degrees()
    return bool(degs) and min(degs) == 0


_MINIMAL_CACHE: dict[tuple[int, int], tuple[list[Multigraph], GenerationStats]] = {}


def find_minimally_matchable(
    k: int, max_vertices: int, jobs: int = 1, guard: int | None = None
) -> tuple[list[Multigraph], GenerationStats]:
    """Every minimally k-matchable multigraph with at most max_vertices
    vertices, up to isomorphism, sorted by canonical form.

    The universe is capped at degree <= k and multiplicity <= k, which every
    minimally k-matchable graph satisfies; odd-order graphs have no perfect
    matching and are skipped.  Results are memoized per (k, max_vertices):
    the lemma1 and claims suites walk the same universe.
    """
    cached = _MINIMAL_CACHE.get((k, max_vertices))
    if cached is not None:
        return cached
    stats = GenerationStats()
    found: list[Multigraph] = []
    if jobs <= 1:
        for n in range(max_vertices + 1):
            for g in expand_subtree(empty_graph(n), k, k, stats, guard=guard):
                if _quick_reject(g, k):
                    continue
                if is_minimally_k_matchable(g, k).is_minimal:
                    found.append(g)
    else:
        shallow, frontier = split_frontier(max_vertices, k, k, _SPLIT_EDGES, stats, guard)
        for g in shallow:
            if not _quick_reject(g, k) and is_minimally_k_matchable(g, k).is_minimal:
                found.append(g)
        tasks = [(g, k, guard) for g in frontier]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for sd, texts in pool.map(_minimal_hunt_worker, tasks, chunksize=1):
                stats.merge(GenerationStats(**sd))
                from .multigraph import parse_graph

                found.extend(parse_graph(t) for t in texts)
        stats.classes -= len(frontier)
    found.sort(key=lambda g: canonical_form(g).serialization)
    _MINIMAL_CACHE[(k, max_vertices)] = (found, stats)
    return found, stats


# -- suite: lemma1 ---------------------------------------------------------------


def run_lemma1(k: int, max_vertices: int, jobs: int = 1, guard: int | None = None) -> SuiteResult:
    minimal, stats = find_minimally_matchable(k, max_vertices, jobs=jobs, guard=guard)
    res = SuiteResult("lemma1", k, checked=len(minimal))
    res.info = {
        "max_vertices": max_vertices,
        "classes_scanned": stats.classes,
    }
    for g in minimal:
        report = lemma1_bound_check(g, k)
        if not report.holds:
            res.violations.append(
                f"{serialize_graph(g)!r}: vertex {report.violating_vertex}: {report.reason}"
            )
    return res


# -- suite: lemma2 ---------------------------------------------------------------


def _lemma2_bases(k: int) -> list[tuple[str | None, Multigraph, int]]:
    """Start points for round trips: (expected name, member part, K2 copies).

    For k = 1 the decomposition has no member part, only bare K2 copies.
    """
    if k == 1:
        return [(None, empty_graph(0), copies) for copies in (1, 2, 3)]
    graphs = known_family_graphs(k)
    if not graphs:
        raise ValueError(f"lemma2 suite has no built-in base family for k={k}")
    return [(name, g, 0) for name, g in graphs.items()]


def run_lemma2(k: int, trials: int = 1000, seed: int = 0x5EED) -> SuiteResult:
    """Random augmentation round trips on the known family for k (k <= 3).

    Subdivisions target the member-derived subgraph only: the decomposition
    adds *bare* K2 copies, and subdividing one of those edges keeps the
    count but destroys minimality (a 4-vertex path is not minimally
    1-matchable), so such a graph is outside the class by design.
    """
    rng = random.Random(seed)
    bases = _lemma2_bases(k)
    res = SuiteResult("lemma2", k, checked=trials, info={"seed": seed, "trials": trials})
    base_canons = {
        name: canonical_form(reduce(g).base).serialization for name, g, _ in bases
    }
    for t in range(trials):
        name, member_part, q0 = bases[rng.randrange(len(bases))]
        expect_count = count_matchings(member_part)
        part = member_part
        adds = 0
        for _ in range(rng.randrange(0, 5)):
            if rng.random() < 0.3 or part.edge_count == 0:
                adds += 1
            else:
                eid = rng.choice(part.edge_ids())
                extra = rng.choice((2, 4))
                part = subdivide_edge(part, SubdivisionSpec(eid, extra))
        g = part
        for _ in range(q0 + adds):
            g = add_k2(g)
        problems = []
        if count_matchings(g) != expect_count:
            problems.append("matching count changed under augmentation")
        cls = classify(g, k)
        if not (cls.verdict.is_k_matchable and cls.verdict.is_minimal):
            problems.append("augmented graph lost minimality")
        elif cls.base_canonical != base_canons[name]:
            problems.append("reduction base differs from the start graph's base")
        elif cls.stripped_k2 != q0 + adds:
            problems.append(
                f"stripped {cls.stripped_k2} two-vertex components, expected {q0 + adds}"
            )
        elif k >= 2 and cls.name != name:
            problems.append(f"classified as {cls.name}, expected {name}")
        if problems:
            res.violations.append(f"trial {t} ({name or 'k2-unions'}): " + "; ".join(problems))
    return res


# -- suite: oracle ---------------------------------------------------------------


def _random_multigraph(rng: random.Random, max_n: int = 12, max_m: int = 24) -> Multigraph:
    n = rng.randrange(0, max_n + 1)
    if n < 2:
        return empty_graph(n)
    m = rng.randrange(0, max_m + 1)
    edges = []
    for i in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edges.append(Edge(min(u, v), max(u, v), i))
    return Multigraph(n, tuple(edges))


def run_oracle(
    max_vertices: int = 5,
    max_multiplicity: int = 2,
    trials: int = 10_000,
    seed: int = 0x0AC1E,
) -> SuiteResult:
    """count_matchings against the subset oracle: the full universe up to
    max_vertices/max_multiplicity, plus random graphs with <= 24 edges."""
    from .generate import iter_multigraphs

    res = SuiteResult("oracle", None, checked=0)
    full = 0
    for g in iter_multigraphs(max_vertices, max_multiplicity):
        full += 1
        if count_matchings(g) != brute_force_count(g):
            res.violations.append(f"full enumeration: {serialize_graph(g)!r}")
    rng = random.Random(seed)
    for t in range(trials):
        g = _random_multigraph(rng)
        if count_matchings(g) != brute_force_count(g):
            res.violations.append(f"random trial {t}: {serialize_graph(g)!r}")
    res.checked = full + trials
    res.info = {
        "full_universe": full,
        "random_trials": trials,
        "seed": seed,
        "max_vertices": max_vertices,
    }
    return res


# -- suite: claims ---------------------------------------------------------------


def greedy_spanning_minimal(g: Multigraph, k: int) -> list[frozenset[int]]:
    """All edge sets reachable by greedily deleting edges while at least k
    perfect matchings remain; each result is a spanning minimally k-matchable
    subgraph.  States are memoized, so each outcome appears once."""
    results: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()
    start = frozenset(g.edge_ids())

    def visit(state: frozenset[int]) -> None:
        if state in seen:
            return
        seen.add(state)
        sub = g.restricted_to_edges(state)
        deletable = [
            eid for eid in sorted(state)
            if count_matchings(sub.delete_edge(eid), cap=k) >= k
        ]
        if not deletable:
            results.add(state)
            return
        for eid in deletable:
            visit(state - {eid})

    visit(start)
    return sorted(results, key=sorted)


def run_claims(k: int, max_vertices: int, jobs: int = 1, guard: int | None = None) -> SuiteResult:
    """For every minimally k-matchable G and every greedily thinned spanning
    minimally (k-1)-matchable H: the deleted edge set F is a matching and is
    contained in every perfect matching of G that H does not have."""
    if k < 2:
        raise ValueError("claims suite needs k >= 2")
    minimal, stats = find_minimally_matchable(k, max_vertices, jobs=jobs, guard=guard)
    res = SuiteResult("claims", k, checked=0)
    res.info = {"max_vertices": max_vertices, "graphs": len(minimal)}
    pairs = 0
    for g in minimal:
        g_matchings = set(enumerate_matchings(g).edge_id_sets())
        for h_edges in greedy_spanning_minimal(g, k - 1):
            pairs += 1
            h = g.restricted_to_edges(h_edges)
            f = frozenset(g.edge_ids()) - h_edges
            label = f"G={serialize_graph(g)!r} |F|={len(f)}"
            covered: set[int] = set()
            clash = False
            for eid in f:
                e = g.edge(eid)
                if e.u in covered or e.v in covered:
                    clash = True
                covered.update((e.u, e.v))
            if clash:
                res.violations.append(f"{label}: F is not a matching")
                continue
            h_matchings = set(enumerate_matchings(h).edge_id_sets())
            for nm in g_matchings - h_matchings:
                if not f <= nm:
                    res.violations.append(
                        f"{label}: matching {sorted(nm)} misses part of F"
                    )
                    break
    res.checked = pairs
    return res


def run_suite(suite: str, **kw) -> SuiteResult:
    if suite == "lemma1":
        return run_lemma1(kw["k"], kw["max_vertices"], jobs=kw.get("jobs", 1), guard=kw.get("guard"))
    if suite == "lemma2":
        return run_lemma2(kw["k"], trials=kw.get("trials", 1000), seed=kw.get("seed", 0x5EED))
    if suite == "oracle":
        return run_oracle(
            max_vertices=kw.get("max_vertices", 5),
            trials=kw.get("trials", 10_000),
            seed=kw.get("seed", 0x0AC1E),
        )
    if suite == "claims":
        return run_claims(kw["k"], kw["max_vertices"], jobs=kw.get("jobs", 1), guard=kw.get("guard"))
    raise ValueError(f"unknown suite {suite!r}")
