"""Backtracking kernels for perfect-matching counting and enumeration.

These are the hot inner loops of the whole package: the minimality test runs
one counting pass per edge of a graph, and the family search runs that test
over every generated isomorphism class.

Graphs arrive as CSR-style incidence arrays (``Multigraph._incidence``): for
vertex v, slots ``indptr[v]:indptr[v+1]`` list its incidences in edge-id
order, ``inc_other[s]`` being the opposite endpoint and ``inc_pos[s]`` the
edge's position in id order.  The search always branches on the lowest-index
unmatched vertex and tries its incident edges in id order, which pins the
enumeration order exactly.
"""

from __future__ import annotations

import numpy as np

from ._backend import BACKEND, jit

# sentinel passed when the caller wants an uncapped count
NO_CAP = np.int64(2**62)


def _count_impl(n, indptr, inc_other, cap):
    if n == 0:
        return 1
    if n % 2 == 1:
        return 0
    matched = np.zeros(n, np.bool_)
    half = n // 2
    branch_v = np.zeros(half, np.int64)
    branch_i = np.zeros(half, np.int64)
    count = 0
    depth = 0
    branch_v[0] = 0
    branch_i[0] = indptr[0] - 1
    while depth >= 0:
        v = branch_v[depth]
        i = branch_i[depth]
        if i >= indptr[v]:
            # undo the edge currently chosen at this depth
            matched[v] = False
            matched[inc_other[i]] = False
        i += 1
        found = np.int64(-1)
        while i < indptr[v + 1]:
            if not matched[inc_other[i]]:
                found = i
                break
            i += 1
        if found < 0:
            depth -= 1
            continue
        branch_i[depth] = found
        matched[v] = True
        matched[inc_other[found]] = True
        u = v + 1
        while u < n and matched[u]:
            u += 1
        if u == n:
            count += 1
            if count >= cap:
                return count
            # stay at this depth; the loop undoes the choice and advances
        else:
            depth += 1
            branch_v[depth] = u
            branch_i[depth] = indptr[u] - 1
    return count


def _enumerate_impl(n, indptr, inc_other, inc_pos, out, limit):
    """Fill `out` (limit x n/2) with edge positions per matching; return count."""
    if n == 0:
        return 1 if limit >= 1 else 0
    if n % 2 == 1:
        return 0
    matched = np.zeros(n, np.bool_)
    half = n // 2
    branch_v = np.zeros(half, np.int64)
    branch_i = np.zeros(half, np.int64)
    count = 0
    depth = 0
    branch_v[0] = 0
    branch_i[0] = indptr[0] - 1
    while depth >= 0:
        v = branch_v[depth]
        i = branch_i[depth]
        if i >= indptr[v]:
            matched[v] = False
            matched[inc_other[i]] = False
        i += 1
        found = np.int64(-1)
        while i < indptr[v + 1]:
            if not matched[inc_other[i]]:
                found = i
                break
            i += 1
        if found < 0:
            depth -= 1
            continue
        branch_i[depth] = found
        matched[v] = True
        matched[inc_other[found]] = True
        u = v + 1
        while u < n and matched[u]:
            u += 1
        if u == n:
            for d in range(depth + 1):
                out[count, d] = inc_pos[branch_i[d]]
            count += 1
            if count >= limit:
                return count
        else:
            depth += 1
            branch_v[depth] = u
            branch_i[depth] = indptr[u] - 1
    return count


# plain-Python references, kept importable for the backend benchmark and the
# parity tests regardless of which backend is active
count_kernel_python = _count_impl
enumerate_kernel_python = _enumerate_impl

# active implementations
count_kernel = jit(_count_impl)
enumerate_kernel = jit(_enumerate_impl)


def numba_kernels():
    """Return (count, enumerate) compiled with numba, or None if unavailable.

    Used by the benchmark so both paths can be timed in one process even when
    MATCHKIT_BACKEND=numpy selected the plain path as active.
    """
    try:
        from numba import njit
    except ImportError:
        return None
    if BACKEND == "numba":
        return count_kernel, enumerate_kernel
    return njit(cache=True)(_count_impl), njit(cache=True)(_enumerate_impl)
