"""Execution-backend selection for the hot matching kernels.

The kernels run either under numba's ``@njit`` or as plain Python over the
same numpy arrays.  Selection happens once at import time via the
``MATCHKIT_BACKEND`` environment variable:

    MATCHKIT_BACKEND=numba    force the jit path (ImportError if numba missing)
    MATCHKIT_BACKEND=numpy    force the pure numpy/Python path
    unset or "auto"           numba when importable, numpy otherwise

The flag only changes speed.  Both paths produce byte-identical results; the
test suite asserts parity, and ``benchmarks/bench_backends.py`` compares
their throughput.
"""

from __future__ import annotations

import os

ENV_VAR = "MATCHKIT_BACKEND"


def _resolve() -> str:
    req = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if req in ("numpy", "python"):
        return "numpy"
    if req in ("numba", "jit"):
        import numba  # noqa: F401  -- fail loudly when forced but unavailable

        return "numba"
    if req != "auto":
        raise ValueError(f"unrecognized {ENV_VAR}={req!r} (use numba, numpy, or auto)")
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "numpy"


BACKEND = _resolve()


def jit(func):
    """Compile with numba when the numba backend is active, else return as-is."""
    if BACKEND == "numba":
        from numba import njit

        return njit(cache=True)(func)
    return func
