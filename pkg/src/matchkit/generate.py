"""Isomorphism-free multigraph generation by canonical augmentation.

Graphs grow one edge at a time from the empty graph on each vertex count.
A child is kept only when it is reached along its canonical construction
path: delete the child's canonically largest edge; the result must be the
parent (checked through canonical forms).  Children of one parent are also
deduplicated locally, so every isomorphism class in the bounded universe
(n <= max_vertices, max degree, per-pair multiplicity cap) is produced
exactly once.  Subtrees are independent, which is what makes the search
parallelizable without shared state.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .canon import canonical_form, canonical_labeling
from .multigraph import Edge, Multigraph, empty_graph


@dataclass
class GenerationStats:
    classes: int = 0
    children_tried: int = 0
    pruned_degree: int = 0
    pruned_multiplicity: int = 0
    duplicate_children: int = 0
    parent_check_rejected: int = 0

    def merge(self, other: "GenerationStats") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class ResourceGuardExceeded(RuntimeError):
    """The generated-class counter hit the configured guard limit."""

    def __init__(self, limit: int, stats: GenerationStats):
        super().__init__(f"resource guard exceeded: more than {limit} graphs generated")
        self.limit = limit
        self.stats = stats


def _canonical_deletion_passes(
    child: Multigraph, added: Edge, parent_canon: bytes, parent_degseq: tuple[int, ...]
) -> bool:
    """The canonical-augmentation acceptance test.

    The canonically largest edge of the child (maximal endpoint pair under
    the canonical labeling; parallel copies are interchangeable) must leave a
    graph isomorphic to the parent.  When the added edge itself realizes that
    pair the test is free, and a degree-sequence mismatch rejects without
    canonicalizing the deletion.
    """
    lab = canonical_labeling(child)

    def pair(e: Edge) -> tuple[int, int]:
        a, b = lab[e.u], lab[e.v]
        return (a, b) if a < b else (b, a)

    added_pair = pair(added)
    best_edge = None
    best_pair = None
    for e in child.edges:
        p = pair(e)
        if best_pair is None or p > best_pair:
            best_pair, best_edge = p, e
    if added_pair == best_pair:
        return True
    degs = child.degrees()
    degs[best_edge.u] -= 1
    degs[best_edge.v] -= 1
    if tuple(sorted(degs)) != parent_degseq:
        return False
    reduced = child.delete_edge(best_edge.id)
    return canonical_form(reduced).serialization == parent_canon


def _children(
    parent: Multigraph,
    max_degree: int,
    max_multiplicity: int,
    stats: GenerationStats,
) -> list[Multigraph]:
    """Accepted one-edge extensions of `parent`, in endpoint order."""
    n = parent.vertex_count
    degs = parent.degrees()
    parent_canon = canonical_form(parent).serialization
    parent_degseq = tuple(sorted(degs))
    next_id = parent.edge_count  # generated graphs keep dense ids
    seen: set[bytes] = set()
    kept: list[Multigraph] = []
    for u in range(n):
        for v in range(u + 1, n):
            if degs[u] + 1 > max_degree or degs[v] + 1 > max_degree:
                stats.pruned_degree += 1
                continue
            if parent.multiplicity(u, v) + 1 > max_multiplicity:
                stats.pruned_multiplicity += 1
                continue
            stats.children_tried += 1
            added = Edge(u, v, next_id)
            child = Multigraph(n, parent.edges + (added,))
            key = canonical_form(child).serialization
            if key in seen:
                stats.duplicate_children += 1
                continue
            seen.add(key)
            if _canonical_deletion_passes(child, added, parent_canon, parent_degseq):
                kept.append(child)
            else:
                stats.parent_check_rejected += 1
    return kept


def expand_subtree(
    root: Multigraph,
    max_degree: int,
    max_multiplicity: int,
    stats: GenerationStats,
    guard: int | None = None,
    stop_edges: int | None = None,
):
    """DFS over the canonical-augmentation subtree rooted at `root`, yielding
    every node (root included).  Nodes with `stop_edges` edges are yielded
    but not expanded, which is how the parallel driver splits the tree."""
    stack = [root]
    while stack:
        g = stack.pop()
        stats.classes += 1
        if guard is not None and stats.classes > guard:
            raise ResourceGuardExceeded(guard, stats)
        yield g
        if stop_edges is not None and g.edge_count >= stop_edges:
            continue
        kids = _children(g, max_degree, max_multiplicity, stats)
        stack.extend(reversed(kids))


def iter_multigraphs(
    max_vertices: int,
    max_multiplicity: int,
    max_degree: int | None = None,
    stats: GenerationStats | None = None,
    guard: int | None = None,
):
    """Yield one representative per isomorphism class of loopless multigraphs
    with n <= max_vertices, degrees <= max_degree, and per-pair multiplicity
    <= max_multiplicity (max_degree None means unconstrained)."""
    if max_vertices < 0:
        raise ValueError("max_vertices must be non-negative")
    if max_multiplicity < 1:
        raise ValueError("max_multiplicity must be positive")
    if stats is None:
        stats = GenerationStats()
    if max_degree is None:
        max_degree = max(0, (max_vertices - 1) * max_multiplicity)
    for n in range(max_vertices + 1):
        yield from expand_subtree(
            empty_graph(n), max_degree, max_multiplicity, stats, guard=guard
        )


def split_frontier(
    max_vertices: int,
    max_multiplicity: int,
    max_degree: int | None,
    split_edges: int,
    stats: GenerationStats,
    guard: int | None = None,
) -> tuple[list[Multigraph], list[Multigraph]]:
    """Partition the generation tree for parallel expansion.

    Returns (shallow, frontier): shallow nodes have fewer than `split_edges`
    edges and are fully handled by the caller; frontier nodes have exactly
    `split_edges` edges and root the subtrees handed to workers.
    """
    if max_degree is None:
        max_degree = max(0, (max_vertices - 1) * max_multiplicity)
    shallow: list[Multigraph] = []
    frontier: list[Multigraph] = []
    for n in range(max_vertices + 1):
        for g in expand_subtree(
            empty_graph(n), max_degree, max_multiplicity, stats,
            guard=guard, stop_edges=split_edges,
        ):
            if g.edge_count >= split_edges:
                frontier.append(g)
            else:
                shallow.append(g)
    return shallow, frontier
