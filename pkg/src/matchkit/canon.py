"""Canonical forms and isomorphism testing for small multigraphs.

Strategy: canonicalize each connected component by multiplicity-aware
iterative refinement followed by backtracking over the surviving vertex
orderings, then assemble components in a fixed sorted order.  Component
decomposition keeps the common highly symmetric inputs cheap (isolated
vertices and repeated components contribute a factorial arithmetically
instead of through search paths).

Two multigraphs are isomorphic iff their canonical serializations (mg-v1
bytes of the relabeled graph with sorted edge list) are equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .multigraph import Multigraph

MAX_CANON_VERTICES = 32


@dataclass(frozen=True)
class CanonicalForm:
    serialization: bytes
    automorphism_count: int

    def text(self) -> str:
        return self.serialization.decode("ascii")


def _refine(k, nbr_pairs, colors):
    """Refine a coloring to the multiplicity-aware equitable fixpoint.

    Signature per vertex: (current color, sorted multiset of
    (neighbor color, edge multiplicity) pairs); new colors are the ranks of
    the sorted signatures, so the refinement is isomorphism-invariant.
    """
    while True:
        sigs = [
            (colors[i], tuple(sorted((colors[j], mij) for j, mij in nbr_pairs[i])))
            for i in range(k)
        ]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


@lru_cache(maxsize=200_000)
def _component_canon_core(k: int, flat: bytes):
    """Canonicalize a connected component given its local multiplicity matrix.

    Cached across graphs: generation produces thousands of graphs sharing
    identical components, so repeats dominate.  Returns (pairs, aut, placed)
    in local coordinates: pairs is the canonical sorted edge list with
    multiplicity repeats, aut the automorphism count, placed[p] the local
    vertex at canonical position p.
    """
    mult = [list(flat[i * k : (i + 1) * k]) for i in range(k)]
    nbr_pairs = [
        [(j, mult[i][j]) for j in range(k) if mult[i][j]] for i in range(k)
    ]
    deg = [sum(m for _, m in nbr_pairs[i]) for i in range(k)]

    if k == 2:
        c = mult[0][1]
        return ((0, 1),) * c, 2, (0, 1)

    init_sigs = [
        (deg[i], tuple(sorted(m for _, m in nbr_pairs[i]))) for i in range(k)
    ]
    rank = {s: r for r, s in enumerate(sorted(set(init_sigs)))}
    colors = _refine(k, nbr_pairs, [rank[s] for s in init_sigs])

    best: dict = {"pairs": None, "aut": 0, "placed": None}

    def leaf(colors):
        by_pos = sorted(range(k), key=colors.__getitem__)
        pos = [0] * k
        for p, i in enumerate(by_pos):
            pos[i] = p
        pairs = []
        for i in range(k):
            pi = pos[i]
            for j, mij in nbr_pairs[i]:
                if i < j:
                    pj = pos[j]
                    a, b = (pi, pj) if pi < pj else (pj, pi)
                    pairs.extend([(a, b)] * mij)
        pairs.sort()
        pairs = tuple(pairs)
        if best["pairs"] is None or pairs < best["pairs"]:
            best["pairs"] = pairs
            best["aut"] = 1
            best["placed"] = by_pos
        elif pairs == best["pairs"]:
            best["aut"] += 1

    def descend(colors):
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = None
        for c in sorted(cells):
            cell = cells[c]
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            leaf(colors)
            return
        for v in target:
            keys = [(colors[i], 0 if i == v else 1) for i in range(k)]
            rk = {s: r for r, s in enumerate(sorted(set(keys)))}
            descend(_refine(k, nbr_pairs, [rk[s] for s in keys]))

    descend(colors)
    return best["pairs"], best["aut"], tuple(best["placed"])


def _component_canon(adj, verts):
    """Canonicalize one connected component in global coordinates."""
    k = len(verts)
    if k == 1:
        return (), 1, [verts[0]]
    local = {v: i for i, v in enumerate(verts)}
    flat = bytearray(k * k)
    big = None
    for v in verts:
        li = local[v]
        for w, c in adj[v].items():
            if c > 255 and big is None:
                big = True
            flat[li * k + local[w]] = min(c, 255)
    if big:
        # multiplicities beyond a byte are outside the intended scale; fall
        # back to an uncached exact key
        raise ValueError("edge multiplicity above 255 is not supported")
    pairs, aut, placed = _component_canon_core(k, bytes(flat))
    return pairs, aut, [verts[i] for i in placed]


def _canonicalize(g: Multigraph):
    if g.vertex_count > MAX_CANON_VERTICES:
        raise ValueError(
            f"canonical form limited to {MAX_CANON_VERTICES} vertices, got {g.vertex_count}"
        )
    cached = g.__dict__.get("_canon")
    if cached is not None:
        return cached

    adj = g._adjacency
    results = []
    for comp in g.components():
        pairs, aut, placed = _component_canon(adj, list(comp))
        results.append((len(comp), len(pairs), pairs, aut, placed))
    results.sort(key=lambda r: (r[0], r[1], r[2]))

    labeling = [0] * g.vertex_count
    all_pairs = []
    aut_total = 1
    offset = 0
    group_key = None
    group_run = 0
    for nc, mc, pairs, aut, placed in results:
        for p, v in enumerate(placed):
            labeling[v] = offset + p
        all_pairs.extend((offset + a, offset + b) for a, b in pairs)
        aut_total *= aut
        key = (nc, mc, pairs)
        if key == group_key:
            group_run += 1
        else:
            aut_total *= math.factorial(group_run)
            group_key, group_run = key, 1
        offset += nc
    aut_total *= math.factorial(group_run)

    all_pairs.sort()
    lines = [f"mg {g.vertex_count} {len(all_pairs)}"]
    lines.extend(f"{a} {b}" for a, b in all_pairs)
    lines.append("")
    form = CanonicalForm("\n".join(lines).encode("ascii"), aut_total)
    result = (form, tuple(labeling))
    g.__dict__["_canon"] = result
    return result


def canonical_form(g: Multigraph) -> CanonicalForm:
    """Deterministic canonical form; equal iff graphs are isomorphic."""
    return _canonicalize(g)[0]


def canonical_labeling(g: Multigraph) -> tuple[int, ...]:
    """The relabeling behind canonical_form: old vertex -> canonical position."""
    return _canonicalize(g)[1]


def is_isomorphic(a: Multigraph, b: Multigraph) -> bool:
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a).serialization == canonical_form(b).serialization
