import random

import pytest

from matchkit.alternating import (
    Chord,
    ChordKind,
    OrientedCycle,
    chambers,
    chords_cross,
    exchange,
    find_chords,
    is_alternating_cycle,
    symdiff_decompose,
)
from matchkit.matching import PerfectMatching, enumerate_matchings, is_perfect_matching
from matchkit.multigraph import complete_graph, cycle_graph, from_pairs, k2_graph

from conftest import random_matchable_graph


def oriented(g):
    """The full cycle of a cycle graph, in vertex order."""
    L = g.vertex_count
    return OrientedCycle(tuple(range(L)), tuple(range(L)))


# -- cycles and exchange -------------------------------------------------------


def test_alternating_cycle_examples():
    c2 = cycle_graph(2)
    assert is_alternating_cycle(c2, PerfectMatching(frozenset([0])), oriented(c2))

    c4 = cycle_graph(4)
    assert is_alternating_cycle(c4, PerfectMatching(frozenset([0, 2])), oriented(c4))
    assert not is_alternating_cycle(
        c4, PerfectMatching(frozenset([0, 3])), oriented(c4)
    )

    k4 = complete_graph(4)
    tri = OrientedCycle((0, 1, 2), (0, 3, 1))  # edges (0,1),(1,2),(0,2)
    for m in enumerate_matchings(k4).matchings:
        assert not is_alternating_cycle(k4, m, tri)


def test_cycle_validation():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        is_alternating_cycle(
            c4, PerfectMatching(frozenset([0, 2])), OrientedCycle((0, 1), (0, 0))
        )
    with pytest.raises(ValueError):
        is_alternating_cycle(
            c4, PerfectMatching(frozenset([0, 2])), OrientedCycle((0, 2), (0, 1))
        )


def test_exchange_example_and_involution():
    c4 = cycle_graph(4)
    m = PerfectMatching(frozenset([0, 2]))
    c = oriented(c4)
    swapped = exchange(m, c)
    assert swapped.edges == frozenset([1, 3])
    assert exchange(swapped, c).edges == m.edges
    with pytest.raises(ValueError):
        exchange(PerfectMatching(frozenset([0, 1])), c)


def test_exchange_flips_one_component_only():
    g = cycle_graph(4).disjoint_union(cycle_graph(6))
    all_sets = {m.edges for m in enumerate_matchings(g).matchings}
    assert len(all_sets) == 4
    m = next(iter(all_sets))
    four_cycle = OrientedCycle((0, 1, 2, 3), (0, 1, 2, 3))
    flipped = exchange(PerfectMatching(m), four_cycle)
    assert flipped.edges in all_sets
    assert flipped.edges & frozenset(range(4, 10)) == m & frozenset(range(4, 10))
    # every matching is reachable from m by exchanges along symdiff cycles
    reached = {m}
    frontier = [m]
    while frontier:
        cur = frontier.pop()
        for other in all_sets:
            for cyc in symdiff_decompose(g, PerfectMatching(cur), PerfectMatching(other)):
                nxt = exchange(PerfectMatching(cur), cyc).edges
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
    assert reached == all_sets


def test_symdiff_examples():
    c2 = cycle_graph(2)
    a, b = enumerate_matchings(c2).matchings
    assert symdiff_decompose(c2, a, a) == []
    cycles = symdiff_decompose(c2, a, b)
    assert len(cycles) == 1 and len(cycles[0]) == 2

    k4 = complete_graph(4)
    ms = enumerate_matchings(k4).matchings
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            cycles = symdiff_decompose(k4, ms[i], ms[j])
            assert len(cycles) == 1 and len(cycles[0]) == 4


def test_symdiff_properties_random(rng):
    for _ in range(150):
        g = random_matchable_graph(rng)
        ms = enumerate_matchings(g, limit=24).matchings
        if len(ms) < 2:
            continue
        m, n = rng.sample(ms, 2)
        cycles = symdiff_decompose(g, m, n)
        seen_vertices = set()
        cur = m
        for c in cycles:
            assert len(c) % 2 == 0
            assert not (set(c.vertices) & seen_vertices)
            seen_vertices.update(c.vertices)
            member = [e in m.edges for e in c.edges]
            assert all(member[i] != member[(i + 1) % len(c)] for i in range(len(c)))
            cur = exchange(cur, c)
        assert cur.edges == n.edges


# -- chords ---------------------------------------------------------------------


def c4_with_diagonal():
    return from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


def test_single_chord_kind_by_orientation():
    g = c4_with_diagonal()
    cyc = OrientedCycle((0, 1, 2, 3), (0, 1, 2, 3))
    out = find_chords(g, cyc, PerfectMatching(frozenset([0, 2])), {4})
    assert len(out) == 1 and out[0].kind is ChordKind.OUT
    inn = find_chords(g, cyc, PerfectMatching(frozenset([1, 3])), {4})
    assert len(inn) == 1 and inn[0].kind is ChordKind.IN
    # no n-edges leaving the cycle: no chords
    assert find_chords(g, cyc, PerfectMatching(frozenset([0, 2])), {1}) == []


def test_odd_chord():
    g = from_pairs(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    cyc = OrientedCycle(tuple(range(6)), tuple(range(6)))
    ch = find_chords(g, cyc, PerfectMatching(frozenset([0, 2, 4])), {6})
    assert len(ch) == 1 and ch[0].kind is ChordKind.ODD


def figure_instance():
    """A 14-vertex instance carrying one chord of each kind.

    Cycle 0..11; single-edge chords (0,2) and (5,9); a length-3 chord
    6-12-13-11 through two off-cycle vertices.  With matched edges
    (0,1),(2,3),...,(10,11),(12,13) the chords come out out/in/odd, and only
    the in-chord and the odd chord cross.
    """
    pairs = [(i, (i + 1) % 12) for i in range(12)]  # ids 0..11
    pairs += [(0, 2), (5, 9), (6, 12), (12, 13), (13, 11)]  # ids 12..16
    g = from_pairs(14, pairs)
    m = PerfectMatching(frozenset([0, 2, 4, 6, 8, 10, 15]))
    cyc = OrientedCycle(tuple(range(12)), tuple(range(12)))
    n_ids = {12, 13, 14, 16}
    return g, cyc, m, n_ids


def test_figure_instance_kinds_and_crossings():
    g, cyc, m, n_ids = figure_instance()
    assert is_perfect_matching(g, m.edges)
    chords = find_chords(g, cyc, m, n_ids, f={14})
    assert len(chords) == 3
    by_ends = {frozenset((c.a, c.b)): c for c in chords}
    p = by_ends[frozenset((0, 2))]
    q = by_ends[frozenset((5, 9))]
    r = by_ends[frozenset((6, 11))]
    assert p.kind is ChordKind.OUT
    assert q.kind is ChordKind.IN
    assert r.kind is ChordKind.ODD
    assert r.vertices == (6, 12, 13, 11)
    assert chords_cross(cyc, q, r) and chords_cross(cyc, r, q)
    assert not chords_cross(cyc, p, q)
    assert not chords_cross(cyc, p, r)
    # externality comes from membership of f
    assert r.external and not p.external and not q.external


def test_figure_odd_chord_extends_to_alternating_cycle():
    g, cyc, m, n_ids = figure_instance()
    r = [c for c in find_chords(g, cyc, m, n_ids) if c.kind is ChordKind.ODD][0]
    # the closure leaves the chord's far endpoint along its matched edge,
    # which runs against the cycle orientation here
    seg_verts, seg_edges = cyc.reversed().segment(11, 6)
    closed = OrientedCycle(r.vertices[:-1] + seg_verts[:-1], r.edges + seg_edges)
    assert is_alternating_cycle(g, m, closed)
    swapped = exchange(m, closed)
    assert is_perfect_matching(g, swapped.edges)


def test_kind_flips_with_orientation():
    g, cyc, m, n_ids = figure_instance()
    fwd = {frozenset((c.a, c.b)): c.kind for c in find_chords(g, cyc, m, n_ids)}
    rev = {frozenset((c.a, c.b)): c.kind for c in find_chords(g, cyc.reversed(), m, n_ids)}
    for ends, kind in fwd.items():
        if kind is ChordKind.ODD:
            assert rev[ends] is ChordKind.ODD
        else:
            assert rev[ends] is (ChordKind.IN if kind is ChordKind.OUT else ChordKind.OUT)


def test_chords_cross_positional_examples():
    cyc = OrientedCycle(tuple(range(8)), tuple(range(8)))

    def chord(a, b):
        return Chord((a, b), (99,), ChordKind.ODD, False)

    # cyclic order a, c, b, d: crossing
    assert chords_cross(cyc, chord(0, 4), chord(2, 6))
    # cyclic order a, b, c, d: not crossing
    assert not chords_cross(cyc, chord(0, 2), chord(4, 6))
    # shared endpoints never cross
    assert not chords_cross(cyc, chord(0, 4), chord(4, 6))


# -- chambers ---------------------------------------------------------------------


def test_chambers_examples():
    g = complete_graph(4).disjoint_union(k2_graph())
    assert chambers(g) == ((0, 1, 2, 3), (4, 5))

    assert chambers(cycle_graph(5)) == ((0,), (1,), (2,), (3,), (4,))

    hexed = from_pairs(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2)])
    assert chambers(hexed) == ((0, 1, 2, 3, 4, 5),)
