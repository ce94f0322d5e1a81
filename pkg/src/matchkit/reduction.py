"""Odd-subdivision reduction and its inverse augmentations.

Smoothing removes a degree-2/degree-2 adjacent vertex pair (the inverse of a
length-3 subdivision step) and stripping removes single-edge two-vertex
components; both preserve the perfect-matching count.  `reduce` drives them
to a fixpoint and records a replayable trace.  `subdivide_edge` and `add_k2`
are the forward moves, used heavily by the randomized round-trip tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_labeling
from .multigraph import Edge, Multigraph, k2_graph


@dataclass(frozen=True)
class SubdivisionSpec:
    """Replace an edge by a path of length 1 + extra_path_length (odd total)."""

    edge: int
    extra_path_length: int


@dataclass(frozen=True)
class SmoothStep:
    """Path w-x-y-z collapsed to a new edge w-z; x and y removed."""

    w: int
    x: int
    y: int
    z: int
    new_edge: int
    vertex_map: tuple[int | None, ...]  # pre-step index -> post-step index


@dataclass(frozen=True)
class StripStep:
    """A two-vertex single-edge component removed."""

    u: int
    v: int
    vertex_map: tuple[int | None, ...]


@dataclass(frozen=True)
class ReductionTrace:
    base: Multigraph
    stripped_k2: int
    steps: tuple[SmoothStep | StripStep, ...]

    def steps_in_original_names(self) -> list[dict]:
        """Steps with vertex names from the original graph (maps composed)."""
        out = []
        # current[i] = original vertex currently at index i
        current: list[int] | None = None
        for step in self.steps:
            if current is None:
                size = len(step.vertex_map)
                current = list(range(size))
            if isinstance(step, SmoothStep):
                out.append(
                    {
                        "op": "smooth",
                        "w": current[step.w],
                        "x": current[step.x],
                        "y": current[step.y],
                        "z": current[step.z],
                        "new_edge": step.new_edge,
                    }
                )
            else:
                out.append({"op": "strip", "u": current[step.u], "v": current[step.v]})
            nxt = [0] * sum(1 for t in step.vertex_map if t is not None)
            for pre, post in enumerate(step.vertex_map):
                if post is not None:
                    nxt[post] = current[pre]
            current = nxt
        return out

    def to_json_dict(self) -> dict:
        from .multigraph import serialize_graph

        return {
            "base_mg": serialize_graph(self.base),
            "stripped_k2": self.stripped_k2,
            "steps": self.steps_in_original_names(),
        }


def subdivide_edge(g: Multigraph, spec: SubdivisionSpec) -> Multigraph:
    """Replace spec.edge by a path of odd length 1 + extra (extra even).

    New internal vertices are appended at indices n, n+1, ...; the replaced
    edge's id is retired and the path edges get fresh ids.
    """
    extra = spec.extra_path_length
    if extra < 0 or extra % 2 != 0:
        raise ValueError("extra_path_length must be even and non-negative")
    e = g.edge(spec.edge)
    if extra == 0:
        return g
    n = g.vertex_count
    next_id = max(f.id for f in g.edges) + 1
    chain = [e.u] + list(range(n, n + extra)) + [e.v]
    new_edges = tuple(
        Edge(min(a, b), max(a, b), next_id + i)
        for i, (a, b) in enumerate(zip(chain, chain[1:]))
    )
    kept = tuple(f for f in g.edges if f.id != e.id)
    return Multigraph(n + extra, kept + new_edges)


def add_k2(g: Multigraph) -> Multigraph:
    """Disjointly add a single two-vertex one-edge component."""
    return g.disjoint_union(k2_graph())


def _smooth_candidates(g: Multigraph) -> list[tuple[int, int, int, int]]:
    """All (x, y, w, z): adjacent degree-2 vertices x,y joined by exactly one
    edge, outer neighbors w of x and z of y, with w != z (no loop created)."""
    degs = g.degrees()
    out = []
    for e in g.edges:
        x, y = e.u, e.v
        if degs[x] != 2 or degs[y] != 2 or g.multiplicity(x, y) != 1:
            continue
        w = z = -1
        for f in g.edges:
            if f.id == e.id:
                continue
            if f.u == x or f.v == x:
                w = f.v if f.u == x else f.u
            if f.u == y or f.v == y:
                z = f.u if f.v == y else f.v
        if w != z:
            out.append((x, y, w, z))
    return out


def has_smooth_candidate(g: Multigraph) -> bool:
    return bool(_smooth_candidates(g))


def smooth_once(g: Multigraph):
    """Perform one smoothing step, or return None when g is irreducible.

    Among all candidate pairs the one whose canonically relabeled (x, y) is
    lexicographically smallest is chosen, which makes the reduction a
    function on isomorphism classes.
    """
    cands = _smooth_candidates(g)
    if not cands:
        return None
    lab = canonical_labeling(g)

    def key(c):
        a, b = lab[c[0]], lab[c[1]]
        return (a, b) if a < b else (b, a)

    x, y, w, z = min(cands, key=key)
    removed = {x, y}
    vmap: list[int | None] = []
    idx = 0
    for v in range(g.vertex_count):
        if v in removed:
            vmap.append(None)
        else:
            vmap.append(idx)
            idx += 1
    kept = tuple(
        Edge(vmap[e.u], vmap[e.v], e.id)
        for e in g.edges
        if e.u not in removed and e.v not in removed
    )
    new_id = max(e.id for e in g.edges) + 1
    wz = Edge(min(vmap[w], vmap[z]), max(vmap[w], vmap[z]), new_id)
    step = SmoothStep(w, x, y, z, new_id, tuple(vmap))
    return Multigraph(g.vertex_count - 2, kept + (wz,)), step


def _strip_one_k2(g: Multigraph):
    """Remove the lowest two-vertex single-edge component, if any.

    A two-vertex component with two or more parallel edges is a 2-cycle (or
    heavier) and is kept.
    """
    for comp in g.components():
        if len(comp) != 2:
            continue
        u, v = comp
        if g.multiplicity(u, v) != 1:
            continue
        removed = {u, v}
        vmap: list[int | None] = []
        idx = 0
        for t in range(g.vertex_count):
            if t in removed:
                vmap.append(None)
            else:
                vmap.append(idx)
                idx += 1
        kept = tuple(
            Edge(vmap[e.u], vmap[e.v], e.id)
            for e in g.edges
            if e.u not in removed and e.v not in removed
        )
        return Multigraph(g.vertex_count - 2, kept), StripStep(u, v, tuple(vmap))
    return None


def reduce(g: Multigraph) -> ReductionTrace:
    """Smooth to a fixpoint, then strip every K2 component, interleaving until
    neither applies.  The perfect-matching count of the base equals g's."""
    steps: list[SmoothStep | StripStep] = []
    q = 0
    cur = g
    while True:
        r = smooth_once(cur)
        if r is not None:
            cur, step = r
            steps.append(step)
            continue
        s = _strip_one_k2(cur)
        if s is not None:
            cur, step = s
            steps.append(step)
            q += 1
            continue
        break
    return ReductionTrace(cur, q, tuple(steps))
