import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchkit.canon import canonical_form, canonical_labeling, is_isomorphic
from matchkit.multigraph import (
    banana_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_pairs,
    k2_graph,
    parse_graph,
    theta_graph,
)

from conftest import random_multigraph


def test_relabelings_of_k4_agree():
    k4 = complete_graph(4)
    base = canonical_form(k4).serialization
    for perm in itertools.permutations(range(4)):
        assert canonical_form(k4.permuted(list(perm))).serialization == base


def test_two_cycles_one_string():
    a = cycle_graph(2).disjoint_union(cycle_graph(2))
    b = a.permuted([2, 3, 0, 1])
    c = a.permuted([1, 3, 0, 2])
    assert canonical_form(a) == canonical_form(b) == canonical_form(c)


def test_theta_differs_from_c2_plus_k2():
    assert not is_isomorphic(theta_graph(), cycle_graph(2).disjoint_union(k2_graph()))
    assert not is_isomorphic(complete_graph(4), theta_graph())
    assert is_isomorphic(cycle_graph(4), cycle_graph(4).permuted([3, 1, 0, 2]))
    assert not is_isomorphic(cycle_graph(4), cycle_graph(2))


def test_multiplicity_sensitivity():
    double = from_pairs(3, [(0, 1), (0, 1), (1, 2)])
    single = from_pairs(3, [(0, 1), (1, 2)])
    assert canonical_form(double).serialization != canonical_form(single).serialization


def test_canonical_string_is_valid_mg():
    g = theta_graph().disjoint_union(cycle_graph(4))
    text = canonical_form(g).serialization.decode("ascii")
    again = parse_graph(text)
    assert is_isomorphic(g, again)
    assert canonical_form(again).serialization.decode("ascii") == text


@pytest.mark.parametrize(
    "graph,count",
    [
        (complete_graph(4), 24),
        (cycle_graph(2), 2),
        (theta_graph(), 2),
        (cycle_graph(6), 12),
        (empty_graph(6), 720),
        (cycle_graph(2).disjoint_union(cycle_graph(2)), 8),
        (k2_graph().disjoint_union(k2_graph()).disjoint_union(k2_graph()), 48),
    ],
)
def test_automorphism_counts(graph, count):
    assert canonical_form(graph).automorphism_count == count


def test_labeling_is_a_permutation_onto_canonical_graph():
    rng = random.Random(5)
    for _ in range(60):
        g = random_multigraph(rng)
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(g.vertex_count))
        relabeled = g.permuted(list(lab))
        pairs = sorted((e.u, e.v) for e in relabeled.edges)
        lines = canonical_form(g).serialization.decode().strip().split("\n")[1:]
        canon_pairs = sorted(tuple(map(int, ln.split())) for ln in lines)
        assert pairs == canon_pairs


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 1 << 30))
def test_permutation_invariance(seed):
    rng = random.Random(seed)
    g = random_multigraph(rng)
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.permuted(perm))


def test_size_limit():
    with pytest.raises(ValueError):
        canonical_form(empty_graph(33))
    # 32 is still inside the supported range
    assert canonical_form(empty_graph(32)).automorphism_count > 0


def test_banana_multiplicities_distinct():
    forms = {canonical_form(banana_graph(c)).serialization for c in (1, 2, 3, 4)}
    assert len(forms) == 4
