"""Loopless undirected multigraphs with identity-carrying parallel edges.

Vertices are dense integers ``0..n-1``.  Every edge carries a stable integer
id, so parallel edges between the same endpoints stay distinguishable: a
perfect matching is a set of edge ids, never a set of endpoint pairs (the
2-cycle on two parallel edges has two distinct perfect matchings).

Graphs are immutable; every mutating operation returns a new value, so they
can be shared freely across worker processes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

EdgeId = int


class Edge(NamedTuple):
    u: int
    v: int  # endpoints stored normalized, u <= v
    id: int


class MgFormatError(ValueError):
    """Malformed mg-v1 input; carries 1-based line and column of the fault."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        seen: set[int] = set()
        norm: list[Edge] = []
        changed = not isinstance(self.edges, tuple)
        for e in self.edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
                changed = True
            if e.u == e.v:
                raise ValueError(f"loop edge {e.u}-{e.v} (id {e.id}) is not allowed")
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise ValueError(f"edge id {e.id}: endpoint out of range for n={n}")
            if e.id in seen:
                raise ValueError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if e.u > e.v:
                e = Edge(e.v, e.u, e.id)
                changed = True
            norm.append(e)
        if changed:
            object.__setattr__(self, "edges", tuple(norm))

    # pickling must not drag along lazily built caches (cached_property
    # stores into __dict__, which default pickling would include)
    def __getstate__(self):
        return (self.vertex_count, self.edges)

    def __setstate__(self, state):
        object.__setattr__(self, "vertex_count", state[0])
        object.__setattr__(self, "edges", state[1])

    # -- elementary queries -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _adjacency(self) -> tuple[dict[int, int], ...]:
        """Per-vertex map neighbor -> multiplicity."""
        adj: list[dict[int, int]] = [dict() for _ in range(self.vertex_count)]
        for u, v, _ in self.edges:
            adj[u][v] = adj[u].get(v, 0) + 1
            adj[v][u] = adj[v].get(u, 0) + 1
        return tuple(adj)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise ValueError(f"unknown edge id {eid}") from None

    def has_edge_id(self, eid: int) -> bool:
        return eid in self._by_id

    def edge_ids(self) -> list[int]:
        return sorted(self._by_id)

    def degree(self, v: int) -> int:
        if not (0 <= v < self.vertex_count):
            raise ValueError(f"vertex {v} out of range for n={self.vertex_count}")
        return sum(self._adjacency[v].values())

    def degrees(self) -> list[int]:
        return [sum(nbrs.values()) for nbrs in self._adjacency]

    def multiplicity(self, u: int, v: int) -> int:
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise ValueError("vertex out of range")
        return self._adjacency[u].get(v, 0)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples, sorted by first vertex.

        Isolated vertices are singleton components; the empty graph has none.
        """
        n = self.vertex_count
        seen = [False] * n
        comps: list[tuple[int, ...]] = []
        for start in range(n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    # -- derived graphs ------------------------------------------------------

    def delete_edge(self, eid: int) -> "Multigraph":
        """Remove one edge; all other edge ids and the vertex set are unchanged."""
        if eid not in self._by_id:
            raise ValueError(f"unknown edge id {eid}")
        return Multigraph(self.vertex_count, tuple(e for e in self.edges if e.id != eid))

    def add_edge(self, u: int, v: int) -> "Multigraph":
        """Append one edge with a fresh id (max existing id + 1, or 0)."""
        nid = max((e.id for e in self.edges), default=-1) + 1
        return Multigraph(self.vertex_count, self.edges + (Edge(u, v, nid),))

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        """Place `other` next to `self`, shifting its vertices and edge ids.

        Vertices shift by self.vertex_count.  Edge ids shift by self's edge
        count, bumped to max(id)+1 when ids are non-dense so the id-uniqueness
        invariant survives.
        """
        off_v = self.vertex_count
        off_e = max(self.edge_count, max((e.id for e in self.edges), default=-1) + 1)
        shifted = tuple(Edge(u + off_v, v + off_v, i + off_e) for u, v, i in other.edges)
        return Multigraph(off_v + other.vertex_count, self.edges + shifted)

    def permuted(self, perm: Iterable[int]) -> "Multigraph":
        """Relabel vertices: vertex v becomes perm[v].  Edge ids are kept."""
        p = list(perm)
        if sorted(p) != list(range(self.vertex_count)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Multigraph(self.vertex_count, tuple(Edge(p[u], p[v], i) for u, v, i in self.edges))

    def restricted_to_edges(self, edge_ids: Iterable[int]) -> "Multigraph":
        """Spanning subgraph keeping only the given edge ids."""
        keep = set(edge_ids)
        missing = keep - set(self._by_id)
        if missing:
            raise ValueError(f"unknown edge ids {sorted(missing)}")
        return Multigraph(self.vertex_count, tuple(e for e in self.edges if e.id in keep))

    # -- kernel-facing incidence arrays ---------------------------------------

    @cached_property
    def _incidence(self):
        """CSR incidence in edge-id order: (indptr, inc_other, inc_pos, ids).

        For vertex v, slots indptr[v]:indptr[v+1] hold its incidences sorted
        by edge id; inc_other is the opposite endpoint, inc_pos the edge's
        position in id order, ids the id for each position.
        """
        n, m = self.vertex_count, len(self.edges)
        order = sorted(range(m), key=lambda i: self.edges[i].id)
        ids = np.fromiter((self.edges[i].id for i in order), np.int64, m)
        deg = np.zeros(n + 1, np.int64)
        for i in order:
            e = self.edges[i]
            deg[e.u + 1] += 1
            deg[e.v + 1] += 1
        indptr = np.cumsum(deg)
        inc_other = np.empty(2 * m, np.int64)
        inc_pos = np.empty(2 * m, np.int64)
        cursor = indptr[:-1].copy()
        for pos, i in enumerate(order):
            e = self.edges[i]
            for a, b in ((e.u, e.v), (e.v, e.u)):
                s = cursor[a]
                inc_other[s] = b
                inc_pos[s] = pos
                cursor[a] = s + 1
        return indptr, inc_other, inc_pos, ids


# -- mg-v1 text format --------------------------------------------------------

_HEADER_RE = re.compile(r"mg (0|[1-9][0-9]*) (0|[1-9][0-9]*)")
_EDGE_RE = re.compile(r"(0|[1-9][0-9]*) (0|[1-9][0-9]*)")


def parse_graph(text: str | bytes) -> Multigraph:
    """Parse mg-v1 text: header ``mg <n> <m>``, then m lines ``<u> <v>``.

    Duplicate endpoint lines denote parallel edges; ``#`` lines are comments.
    Edge ids are assigned 0..m-1 in file order.  Raises MgFormatError with
    1-based line/column on syntax faults, loops, or out-of-range vertices.
    """
    if isinstance(text, (bytes, bytearray, memoryview)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise MgFormatError("input is not ASCII", 1, exc.start + 1) from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    significant: list[tuple[int, str]] = []
    for no, raw in enumerate(lines, start=1):
        if raw.startswith("#"):
            continue
        significant.append((no, raw))

    if not significant:
        raise MgFormatError("missing header line", 1, 1)
    head_no, head = significant[0]
    mh = _HEADER_RE.fullmatch(head)
    if mh is None:
        raise MgFormatError("expected header 'mg <n> <m>'", head_no, 1)
    n, m = int(mh.group(1)), int(mh.group(2))

    body = significant[1:]
    if len(body) < m:
        last = significant[-1][0]
        raise MgFormatError(f"expected {m} edge lines, found {len(body)}", last + 1, 1)
    if len(body) > m:
        extra_no, _ = body[m]
        raise MgFormatError(f"unexpected content after {m} edge lines", extra_no, 1)

    edges: list[Edge] = []
    for eid, (no, raw) in enumerate(body):
        me = _EDGE_RE.fullmatch(raw)
        if me is None:
            raise MgFormatError("expected edge line '<u> <v>'", no, 1)
        u, v = int(me.group(1)), int(me.group(2))
        if u >= n:
            raise MgFormatError(f"vertex {u} out of range (n={n})", no, me.start(1) + 1)
        if v >= n:
            raise MgFormatError(f"vertex {v} out of range (n={n})", no, me.start(2) + 1)
        if u == v:
            raise MgFormatError(f"loop edge {u} {v} rejected", no, 1)
        edges.append(Edge(u, v, eid))
    return Multigraph(n, tuple(edges))


def serialize_graph(g: Multigraph) -> str:
    """Serialize to mg-v1: endpoints as min-space-max, edges in id order."""
    out = [f"mg {g.vertex_count} {g.edge_count}"]
    for e in sorted(g.edges, key=lambda e: e.id):
        out.append(f"{e.u} {e.v}")
    out.append("")
    return "\n".join(out)


def disjoint_union(a: Multigraph, b: Multigraph) -> Multigraph:
    return a.disjoint_union(b)


# -- small builders used throughout the code base and tests -------------------

def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    return Multigraph(n, tuple(Edge(u, v, i) for i, (u, v) in enumerate(pairs)))


def empty_graph(n: int) -> Multigraph:
    return Multigraph(n, ())


def k2_graph() -> Multigraph:
    return from_pairs(2, [(0, 1)])


def cycle_graph(length: int) -> Multigraph:
    """C_length; length 2 gives the 2-cycle on two parallel edges."""
    if length < 2:
        raise ValueError("cycle length must be at least 2")
    return from_pairs(length, [(i, (i + 1) % length) for i in range(length)])


def path_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Multigraph:
    return from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def banana_graph(multiplicity: int) -> Multigraph:
    """Two vertices joined by `multiplicity` parallel edges."""
    if multiplicity < 1:
        raise ValueError("need at least one edge")
    return from_pairs(2, [(0, 1)] * multiplicity)


def theta_graph() -> Multigraph:
    """Two vertices joined by three parallel edges (three perfect matchings)."""
    return banana_graph(3)
