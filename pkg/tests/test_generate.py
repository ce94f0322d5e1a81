import itertools

import pytest

from matchkit.canon import canonical_form
from matchkit.generate import (
    GenerationStats,
    ResourceGuardExceeded,
    iter_multigraphs,
    split_frontier,
)
from matchkit.multigraph import from_pairs


def brute_canon_set(n: int, max_mult: int) -> set[bytes]:
    """Canonical forms of every labeled multigraph on exactly n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mults in itertools.product(range(max_mult + 1), repeat=len(pairs)):
        edges = []
        for (u, v), m in zip(pairs, mults):
            edges.extend([(u, v)] * m)
        seen.add(canonical_form(from_pairs(n, edges)).serialization)
    return seen


@pytest.mark.parametrize("max_mult", [1, 2])
def test_generation_matches_bruteforce_small(max_mult):
    generated: dict[int, set[bytes]] = {}
    for g in iter_multigraphs(4, max_mult):
        generated.setdefault(g.vertex_count, set()).add(
            canonical_form(g).serialization
        )
    for n in range(5):
        assert generated.get(n, set()) == brute_canon_set(n, max_mult)


def test_generation_matches_bruteforce_n5():
    generated: dict[int, set[bytes]] = {}
    for g in iter_multigraphs(5, 2):
        generated.setdefault(g.vertex_count, set()).add(
            canonical_form(g).serialization
        )
    for n in range(6):
        assert generated.get(n, set()) == brute_canon_set(n, 2)


def test_no_duplicates_emitted():
    seen = set()
    for g in iter_multigraphs(5, 2):
        key = canonical_form(g).serialization
        assert key not in seen
        seen.add(key)


def test_degree_and_multiplicity_caps_respected():
    for g in iter_multigraphs(6, 2, max_degree=3):
        assert all(d <= 3 for d in g.degrees())
        assert all(
            g.multiplicity(e.u, e.v) <= 2 for e in g.edges
        )


def test_guard_trips():
    stats = GenerationStats()
    with pytest.raises(ResourceGuardExceeded):
        for _ in iter_multigraphs(6, 2, stats=stats, guard=10):
            pass


def test_split_frontier_partitions_tree():
    serial = {
        canonical_form(g).serialization for g in iter_multigraphs(5, 2, max_degree=3)
    }
    stats = GenerationStats()
    shallow, frontier = split_frontier(5, 2, 3, 2, stats)
    from matchkit.generate import expand_subtree

    combined = {canonical_form(g).serialization for g in shallow}
    for root in frontier:
        sub = GenerationStats()
        for g in expand_subtree(root, 3, 2, sub):
            combined.add(canonical_form(g).serialization)
    assert combined == serial


def test_deterministic_order():
    first = [canonical_form(g).serialization for g in iter_multigraphs(4, 2)]
    second = [canonical_form(g).serialization for g in iter_multigraphs(4, 2)]
    assert first == second
