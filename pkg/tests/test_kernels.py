"""Backend parity: the numba-compiled kernels and the plain-Python path must
produce identical counts and identical enumeration orders."""

import random

import numpy as np
import pytest

from matchkit import _kernels
from matchkit.matching import count_matchings
from matchkit.multigraph import complete_graph, cycle_graph

from conftest import random_multigraph

jitted = _kernels.numba_kernels()
needs_numba = pytest.mark.skipif(jitted is None, reason="numba not installed")


def kernel_args(g):
    indptr, inc_other, inc_pos, ids = g._incidence
    return np.int64(g.vertex_count), indptr, inc_other, inc_pos, ids


@needs_numba
def test_count_parity_random():
    count_jit, _ = jitted
    rng = random.Random(41)
    for _ in range(300):
        g = random_multigraph(rng, max_n=9, max_m=16)
        n, indptr, inc_other, _, _ = kernel_args(g)
        for cap in (_kernels.NO_CAP, np.int64(1), np.int64(3)):
            a = count_jit(n, indptr, inc_other, cap)
            b = _kernels.count_kernel_python(n, indptr, inc_other, cap)
            assert a == b


@needs_numba
def test_enumeration_order_parity():
    _, enum_jit = jitted
    rng = random.Random(43)
    for _ in range(120):
        g = random_multigraph(rng, max_n=8, max_m=12)
        total = count_matchings(g)
        if total == 0:
            continue
        n, indptr, inc_other, inc_pos, _ = kernel_args(g)
        half = g.vertex_count // 2
        out_a = np.zeros((total, half), np.int64)
        out_b = np.zeros((total, half), np.int64)
        na = enum_jit(n, indptr, inc_other, inc_pos, out_a, np.int64(total))
        nb = _kernels.enumerate_kernel_python(
            n, indptr, inc_other, inc_pos, out_b, np.int64(total)
        )
        assert na == nb == total
        assert (out_a == out_b).all()


def test_python_kernel_reference_values():
    for g, want in [
        (cycle_graph(2), 2),
        (complete_graph(4), 3),
        (cycle_graph(6), 2),
        (cycle_graph(5), 0),
    ]:
        n, indptr, inc_other, _, _ = kernel_args(g)
        assert _kernels.count_kernel_python(n, indptr, inc_other, _kernels.NO_CAP) == want


def test_backend_reported():
    from matchkit import BACKEND

    assert BACKEND in ("numba", "numpy")
