"""Alternating-cycle machinery: exchange, symmetric-difference decomposition,
chord discovery and taxonomy, crossing tests, and chamber decomposition.

An oriented cycle carries its vertex and edge sequences explicitly (edge i
joins vertex i to vertex i+1, cyclically), so a 2-cycle on two parallel
edges is a first-class citizen.  A chord of a cycle is an alternating path
that leaves the cycle on an n-edge and returns to it, meeting it only at its
end vertices; its kind (in/out/odd) is read off the orientation of the
matched cycle edges at those endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .matching import PerfectMatching, count_matchings, is_perfect_matching
from .multigraph import Edge, Multigraph


class ChordKind(str, Enum):
    IN = "in"
    OUT = "out"
    ODD = "odd"


@dataclass(frozen=True)
class OrientedCycle:
    """Cyclic vertex/edge sequences with a fixed direction.

    vertices[i] -- edges[i] -- vertices[(i+1) % len] for every i.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, v: int) -> int:
        return self.vertices.index(v)

    def reversed(self) -> "OrientedCycle":
        """The same cycle walked in the opposite direction."""
        verts = (self.vertices[0],) + tuple(self.vertices[:0:-1])
        edges = tuple(self.edges[::-1])
        return OrientedCycle(verts, edges)

    def segment(self, a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The a..b subpath following the orientation: (vertices, edges)."""
        ia, ib = self.position(a), self.position(b)
        if ia == ib:
            raise ValueError("segment endpoints must differ")
        L = len(self.vertices)
        verts = [a]
        edges = []
        i = ia
        while i != ib:
            edges.append(self.edges[i])
            i = (i + 1) % L
            verts.append(self.vertices[i])
        return tuple(verts), tuple(edges)


@dataclass(frozen=True)
class Chord:
    """An alternating path meeting its host cycle only at its end vertices."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    kind: ChordKind
    external: bool  # contains an edge of the designated set f

    @property
    def a(self) -> int:
        return self.vertices[0]

    @property
    def b(self) -> int:
        return self.vertices[-1]

    def to_json_dict(self) -> dict:
        return {
            "endpoints": [self.a, self.b],
            "kind": self.kind.value,
            "external": self.external,
            "vertices": list(self.vertices),
            "edges": list(self.edges),
        }


def check_cycle(g: Multigraph, c: OrientedCycle) -> None:
    """Raise ValueError unless c is a genuine cycle of g."""
    L = len(c.vertices)
    if L < 2 or len(c.edges) != L:
        raise ValueError("cycle needs matching vertex/edge sequences of length >= 2")
    if len(set(c.vertices)) != L:
        raise ValueError("cycle vertices must be distinct")
    if len(set(c.edges)) != L:
        raise ValueError("cycle edges must be distinct")
    for i in range(L):
        u, v = c.vertices[i], c.vertices[(i + 1) % L]
        e = g.edge(c.edges[i])
        if {e.u, e.v} != {u, v}:
            raise ValueError(f"edge {e.id} does not join {u} and {v}")


def is_alternating_cycle(g: Multigraph, m: PerfectMatching, c: OrientedCycle) -> bool:
    """True iff the matched cycle edges form a perfect matching of the cycle."""
    check_cycle(g, c)
    L = len(c.edges)
    if L % 2 == 1:
        return False
    member = [e in m.edges for e in c.edges]
    return all(member[i] != member[(i + 1) % L] for i in range(L))


def _alternates(m: PerfectMatching, c: OrientedCycle) -> bool:
    L = len(c.edges)
    if L % 2 == 1:
        return False
    member = [e in m.edges for e in c.edges]
    return all(member[i] != member[(i + 1) % L] for i in range(L))


def exchange(m: PerfectMatching, c: OrientedCycle) -> PerfectMatching:
    """Swap matched and unmatched edges along an m-alternating cycle."""
    if not _alternates(m, c):
        raise ValueError("cycle is not alternating for the given matching")
    return PerfectMatching(m.edges.symmetric_difference(c.edges))


def symdiff_decompose(
    g: Multigraph, m: PerfectMatching, n: PerfectMatching
) -> list[OrientedCycle]:
    """Partition the symmetric difference of two perfect matchings into
    vertex-disjoint even cycles alternating between the two.

    Each cycle starts at its lowest vertex and leaves it along its m-edge.
    """
    for name, pm in (("m", m), ("n", n)):
        if not is_perfect_matching(g, pm.edges):
            raise ValueError(f"{name} is not a perfect matching of the graph")
    m_at: dict[int, int] = {}
    n_at: dict[int, int] = {}
    for eid in m.edges:
        e = g.edge(eid)
        m_at[e.u] = eid
        m_at[e.v] = eid
    for eid in n.edges:
        e = g.edge(eid)
        n_at[e.u] = eid
        n_at[e.v] = eid

    def other(eid: int, v: int) -> int:
        e = g.edge(eid)
        return e.v if e.u == v else e.u

    cycles = []
    visited: set[int] = set()
    for start in range(g.vertex_count):
        if start in visited or start not in m_at:
            continue
        if m_at[start] == n_at[start]:
            continue
        verts = [start]
        edges = []
        v = start
        use_m = True
        while True:
            eid = m_at[v] if use_m else n_at[v]
            edges.append(eid)
            v = other(eid, v)
            if v == start:
                break
            verts.append(v)
            use_m = not use_m
        visited.update(verts)
        cycles.append(OrientedCycle(tuple(verts), tuple(edges)))
    return cycles


def _matching_edge_map(g: Multigraph, edge_ids) -> dict[int, int]:
    """vertex -> incident edge id; raises if two edges share a vertex."""
    at: dict[int, int] = {}
    for eid in edge_ids:
        e = g.edge(eid)
        for v in (e.u, e.v):
            if v in at:
                raise ValueError(f"edges {at[v]} and {eid} share vertex {v}")
            at[v] = eid
    return at


def find_chords(
    g: Multigraph,
    c: OrientedCycle,
    m: PerfectMatching,
    n,
    f=(),
) -> list[Chord]:
    """All chords of c: maximal alternating paths leaving the cycle at an
    n-edge and returning to it, internally disjoint from the cycle.

    m must be a perfect matching with c m-alternating.  n may be any matching
    (a PerfectMatching or a set of edge ids); vertices without an n-edge
    simply start no chord.  A chord is external iff it uses an edge of f.

    Discovery is deterministic: each chord is unique given its starting
    n-edge (every vertex carries one m-edge and at most one n-edge), so the
    walk needs no search.
    """
    if not is_perfect_matching(g, m.edges):
        raise ValueError("m is not a perfect matching of the graph")
    if not is_alternating_cycle(g, m, c):
        raise ValueError("cycle is not m-alternating")
    n_ids = frozenset(n.edges if isinstance(n, PerfectMatching) else n)
    f_ids = frozenset(f.edges if isinstance(f, PerfectMatching) else f)
    n_at = _matching_edge_map(g, n_ids)
    m_at = _matching_edge_map(g, m.edges)

    cyc_verts = set(c.vertices)
    cyc_edges = set(c.edges)

    def other(eid: int, v: int) -> int:
        e = g.edge(eid)
        return e.v if e.u == v else e.u

    L = len(c.vertices)
    leaving = {}  # vertex -> its outgoing cycle edge (orientation order)
    arriving = {}
    for i, v in enumerate(c.vertices):
        leaving[v] = c.edges[i]
        arriving[c.vertices[(i + 1) % L]] = c.edges[i]

    def endpoint_initial(v: int) -> bool:
        return m_at[v] == leaving[v]

    chords: list[Chord] = []
    consumed: set[int] = set()
    for a in c.vertices:
        if a in consumed:
            continue
        start = n_at.get(a)
        if start is None or start in cyc_edges:
            continue
        verts = [a]
        eids = [start]
        cur = other(start, a)
        ok = True
        while cur not in cyc_verts:
            em = m_at[cur]
            if em == eids[-1]:
                ok = False  # dead end: the path cannot alternate onward
                break
            verts.append(cur)
            eids.append(em)
            cur = other(em, cur)
            en = n_at.get(cur)
            if en is None or en == em:
                ok = False
                break
            verts.append(cur)
            eids.append(en)
            cur = other(en, cur)
        if not ok:
            continue
        b = cur
        verts.append(b)
        consumed.add(a)
        consumed.add(b)
        ia, ib = endpoint_initial(a), endpoint_initial(b)
        if ia and ib:
            kind = ChordKind.OUT
        elif not ia and not ib:
            kind = ChordKind.IN
        else:
            kind = ChordKind.ODD
        chords.append(
            Chord(tuple(verts), tuple(eids), kind, any(e in f_ids for e in eids))
        )
    return chords


def chords_cross(c: OrientedCycle, p: Chord, q: Chord) -> bool:
    """True iff the endpoint pairs interleave around the cycle.

    Chords sharing an endpoint do not cross.  Symmetric in p and q.
    """
    ends = {p.a, p.b, q.a, q.b}
    if len(ends) < 4:
        return False
    inside, _ = c.segment(p.a, p.b)
    interior = set(inside[1:-1])
    return (q.a in interior) != (q.b in interior)


def _edge_in_some_matching(g: Multigraph, u: int, v: int) -> bool:
    """True iff some perfect matching of g uses an edge between u and v.

    Equivalent to: g minus both endpoints (and their incident edges) has a
    perfect matching.  Tested per endpoint pair, so graphs with very many
    matchings stay cheap.
    """
    keep = [w for w in range(g.vertex_count) if w != u and w != v]
    remap = {w: i for i, w in enumerate(keep)}
    sub = Multigraph(
        len(keep),
        tuple(
            Edge(remap[e.u], remap[e.v], e.id)
            for e in g.edges
            if e.u in remap and e.v in remap
        ),
    )
    return count_matchings(sub, cap=1) == 1


def chambers(g: Multigraph) -> tuple[tuple[int, ...], ...]:
    """Components of the spanning subgraph formed by all edges lying in some
    perfect matching.  Vertices on no matched edge are singletons."""
    pair_ok: dict[tuple[int, int], bool] = {}
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        key = (e.u, e.v)
        if key not in pair_ok:
            pair_ok[key] = _edge_in_some_matching(g, e.u, e.v)
        if pair_ok[key]:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(vs)) for vs in groups.values()))
