"""Exact perfect-matching enumeration and the minimal k-matchability test.

A graph is k-matchable when it has at least k perfect matchings, and
minimally k-matchable when additionally deleting any single edge destroys
k-matchability.  Counting is done by deterministic backtracking (see
``_kernels``); an independent subset-enumeration oracle (`brute_force_count`)
cross-checks it in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .multigraph import Multigraph

BRUTE_FORCE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class PerfectMatching:
    """An edge-id set covering every vertex of its host graph exactly once."""

    edges: frozenset[int]

    def sorted_ids(self) -> list[int]:
        return sorted(self.edges)


@dataclass(frozen=True)
class MatchingSet:
    matchings: tuple[PerfectMatching, ...]
    exhaustive: bool  # False only when a limit truncated the enumeration

    def __len__(self) -> int:
        return len(self.matchings)

    def edge_id_sets(self) -> list[frozenset[int]]:
        return [m.edges for m in self.matchings]


@dataclass(frozen=True)
class MinimalityVerdict:
    is_k_matchable: bool
    is_minimal: bool
    witness_edge: int | None  # lowest-id edge whose deletion keeps >= k matchings
    count: int  # matching count, capped at 2k-1


@dataclass(frozen=True)
class Lemma1Report:
    """Outcome of the degree/count bound check on a minimally k-matchable graph."""

    holds: bool
    violating_vertex: int | None
    reason: str | None


def _has_odd_component(g: Multigraph) -> bool:
    return any(len(c) % 2 for c in g.components())


def count_matchings(g: Multigraph, cap: int | None = None) -> int:
    """Number of perfect matchings, or min(count, cap) when cap is given.

    Components of odd order short-circuit to 0 without search.
    """
    if cap is not None and cap < 1:
        raise ValueError("cap must be a positive integer")
    if g.vertex_count % 2 == 1 or _has_odd_component(g):
        return 0
    indptr, inc_other, _, _ = g._incidence
    cap64 = np.int64(cap) if cap is not None else _kernels.NO_CAP
    return int(_kernels.count_kernel(np.int64(g.vertex_count), indptr, inc_other, cap64))


def enumerate_matchings(g: Multigraph, limit: int | None = None) -> MatchingSet:
    """All perfect matchings in deterministic backtracking order.

    With `limit`, at most that many are returned and `exhaustive` records
    whether the enumeration was truncated.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be a positive integer")
    if g.vertex_count % 2 == 1 or _has_odd_component(g):
        return MatchingSet((), True)
    probe_cap = None if limit is None else limit + 1
    total = count_matchings(g, cap=probe_cap)
    exhaustive = limit is None or total <= limit
    rows = total if limit is None else min(total, limit)
    half = g.vertex_count // 2
    if rows == 0:
        return MatchingSet((), exhaustive)
    indptr, inc_other, inc_pos, ids = g._incidence
    out = np.zeros((rows, half), np.int64)
    found = int(
        _kernels.enumerate_kernel(
            np.int64(g.vertex_count), indptr, inc_other, inc_pos, out, np.int64(rows)
        )
    )
    matchings = tuple(
        PerfectMatching(frozenset(int(ids[p]) for p in out[r, :half])) for r in range(found)
    )
    return MatchingSet(matchings, exhaustive)


def brute_force_count(g: Multigraph) -> int:
    """Independent oracle: test every n/2-edge subset against the definition.

    Subsets of any other size cannot cover each vertex exactly once, so they
    are skipped as trivially non-matchings.  Requires at most
    BRUTE_FORCE_EDGE_LIMIT edges.
    """
    if g.edge_count > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(
            f"brute force limited to {BRUTE_FORCE_EDGE_LIMIT} edges, got {g.edge_count}"
        )
    n = g.vertex_count
    full = (1 << n) - 1
    count = 0
    for combo in itertools.combinations(g.edges, n // 2):
        cover = 0
        for u, v, _ in combo:
            bits = (1 << u) | (1 << v)
            if cover & bits:
                cover = -1
                break
            cover |= bits
        if cover == full:
            count += 1
    return count


def is_perfect_matching(g: Multigraph, edge_ids) -> bool:
    """True iff the edge ids cover every vertex of g exactly once."""
    seen = [0] * g.vertex_count
    for eid in edge_ids:
        e = g.edge(eid)
        seen[e.u] += 1
        seen[e.v] += 1
    return all(c == 1 for c in seen)


def is_minimally_k_matchable(g: Multigraph, k: int) -> MinimalityVerdict:
    """Decide k-matchability and minimality.

    The count is computed with cap 2k-1 (all the verdict needs); per-edge
    deletions are tested with cap k, lowest edge id first, so the witness is
    the lowest-id counterexample.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    cnt = count_matchings(g, cap=2 * k - 1)
    if cnt < k:
        return MinimalityVerdict(False, False, None, cnt)
    for eid in g.edge_ids():
        if count_matchings(g.delete_edge(eid), cap=k) >= k:
            return MinimalityVerdict(True, False, eid, cnt)
    return MinimalityVerdict(True, True, None, cnt)


def lemma1_bound_check(g: Multigraph, k: int) -> Lemma1Report:
    """Check the bounds every minimally k-matchable graph must satisfy.

    For each vertex of degree d >= 2: |M(g)| <= d/(d-1) * (k-1); the maximum
    degree is at most k; and |M(g)| <= 2k-2 whenever some vertex has degree
    >= 2.  Raises ValueError when g is not minimally k-matchable (that is a
    precondition fault, not a bound violation).
    """
    verdict = is_minimally_k_matchable(g, k)
    if not (verdict.is_k_matchable and verdict.is_minimal):
        raise ValueError("precondition violated: graph is not minimally k-matchable")
    s = count_matchings(g)
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d > k:
            return Lemma1Report(False, v, f"degree {d} exceeds k={k}")
        if d >= 2 and s * (d - 1) > d * (k - 1):
            return Lemma1Report(
                False, v, f"count {s} exceeds d/(d-1)*(k-1) at degree-{d} vertex"
            )
    if s > 2 * k - 2:
        for v, d in enumerate(degs):
            if d >= 2:
                return Lemma1Report(False, v, f"count {s} exceeds 2k-2={2 * k - 2}")
    return Lemma1Report(True, None, None)
