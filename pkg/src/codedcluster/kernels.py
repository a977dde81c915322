"""Hot symbol-stream kernels over GF(2^16), with numba and numpy paths.

Encoding, block combination, and repair all reduce to the same inner
loop: XOR-accumulating scalar multiples of uint16 payload rows.  That
loop is implemented twice:

* ``numba`` — ``@njit`` loops over the raw arrays (default when numba
  imports cleanly);
* ``numpy`` — vectorised table lookups, no compilation step.

Selection happens once at import via the ``CODEDCLUSTER_BACKEND``
environment variable (``numba`` or ``numpy``; anything else falls back
to auto-detection).  Both implementations stay importable so
``benchmarks/bench_kernels.py`` and the equivalence tests can compare
them directly.

All kernels are pure: inputs are never mutated, outputs are fresh
arrays of dtype uint16.
"""

from __future__ import annotations

import os

import numpy as np

from .gf16 import EXP, LOG

_ENV_VAR = "CODEDCLUSTER_BACKEND"


def _scale_numpy(c: int, src: np.ndarray) -> np.ndarray:
    out = np.zeros(src.shape, dtype=np.uint16)
    if c == 0:
        return out
    nz = src != 0
    out[nz] = EXP[LOG[src[nz]] + int(LOG[c])]
    return out


def _mul_arrays_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape, dtype=np.uint16)
    nz = (a != 0) & (b != 0)
    out[nz] = EXP[LOG[a[nz]] + LOG[b[nz]]]
    return out


def _combine_numpy(coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
    out = np.zeros(rows.shape[1], dtype=np.uint16)
    for i in range(rows.shape[0]):
        c = int(coeffs[i])
        if c == 0:
            continue
        row = rows[i]
        nz = row != 0
        out[nz] ^= EXP[LOG[row[nz]] + int(LOG[c])]
    return out


try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

if HAS_NUMBA:

    @njit(cache=True)
    def _scale_jit(c, src, exp, log):
        out = np.zeros(src.shape[0], dtype=np.uint16)
        if c == 0:
            return out
        lc = log[c]
        for j in range(src.shape[0]):
            v = src[j]
            if v != 0:
                out[j] = exp[lc + log[v]]
        return out

    @njit(cache=True)
    def _mul_arrays_jit(a, b, exp, log):
        out = np.zeros(a.shape[0], dtype=np.uint16)
        for j in range(a.shape[0]):
            x = a[j]
            y = b[j]
            if x != 0 and y != 0:
                out[j] = exp[log[x] + log[y]]
        return out

    @njit(cache=True)
    def _combine_jit(coeffs, rows, exp, log):
        out = np.zeros(rows.shape[1], dtype=np.uint16)
        for i in range(rows.shape[0]):
            c = coeffs[i]
            if c == 0:
                continue
            lc = log[c]
            for j in range(rows.shape[1]):
                v = rows[i, j]
                if v != 0:
                    out[j] ^= exp[lc + log[v]]
        return out

    def _scale_numba(c: int, src: np.ndarray) -> np.ndarray:
        return _scale_jit(np.uint16(c), np.ascontiguousarray(src), EXP, LOG)

    def _mul_arrays_numba(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return _mul_arrays_jit(
            np.ascontiguousarray(a), np.ascontiguousarray(b), EXP, LOG
        )

    def _combine_numba(coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
        return _combine_jit(
            np.ascontiguousarray(coeffs), np.ascontiguousarray(rows), EXP, LOG
        )


def _pick_backend() -> str:
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAS_NUMBA:
            raise ImportError(f"{_ENV_VAR}=numba but numba is not importable")
        return "numba"
    return "numba" if HAS_NUMBA else "numpy"


BACKEND = _pick_backend()

if BACKEND == "numba":
    scale = _scale_numba
    mul_arrays = _mul_arrays_numba
    combine = _combine_numba
else:
    scale = _scale_numpy
    mul_arrays = _mul_arrays_numpy
    combine = _combine_numpy

scale.__doc__ = "Multiply every symbol of ``src`` by the scalar ``c``."
mul_arrays.__doc__ = "Elementwise GF(2^16) product of two equal-length arrays."
combine.__doc__ = (
    "Linear combination sum_i coeffs[i] * rows[i] of an (m, L) symbol matrix."
)


def warmup() -> None:
    """Run each kernel once so JIT compilation cost is paid up front."""
    c = np.array([1, 2], dtype=np.uint16)
    r = np.array([[1, 2], [3, 4]], dtype=np.uint16)
    combine(c, r)
    scale(3, c)
    mul_arrays(c, c)
