import random

import pytest

from matchkit.multigraph import Edge, Multigraph


def random_multigraph(rng: random.Random, max_n: int = 8, max_m: int = 14) -> Multigraph:
    """A random labeled multigraph (parallel edges allowed, no loops)."""
    n = rng.randrange(0, max_n + 1)
    if n < 2:
        return Multigraph(n, ())
    m = rng.randrange(0, max_m + 1)
    edges = []
    for i in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edges.append(Edge(min(u, v), max(u, v), i))
    return Multigraph(n, tuple(edges))


def random_matchable_graph(rng: random.Random) -> Multigraph:
    """Union of even cycles plus a few extra edges: at least two matchings."""
    from matchkit.multigraph import cycle_graph

    g = cycle_graph(rng.choice((2, 4, 6)))
    for _ in range(rng.randrange(0, 2)):
        g = g.disjoint_union(cycle_graph(rng.choice((2, 4, 6))))
    n = g.vertex_count
    for _ in range(rng.randrange(0, 4)):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        g = g.add_edge(min(u, v), max(u, v))
    return g


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
