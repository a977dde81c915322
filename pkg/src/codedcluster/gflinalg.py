"""Vectors and matrices over GF(2^16).

Vectors are 1-D and matrices 2-D numpy uint16 arrays (row-major).
Everything is exact: field arithmetic has no rounding, so solve/rank
results are equalities, not approximations.

Elimination pivots by first-nonzero scan with lowest-row-index
tie-break (a finite field has no magnitude ordering), which makes every
result deterministic.  All randomness flows through an injected
``numpy.random.Generator`` so runs are replayable.
"""

from __future__ import annotations

import numpy as np

from . import gf16, kernels


class SingularMatrix(ValueError):
    """Square system has no unique solution (rank below dimension)."""


class TrivialNullspace(ValueError):
    """Matrix has full column rank, so only the zero vector is in its kernel."""


def random_vector(length: int, rng: np.random.Generator) -> np.ndarray:
    """Vector of ``length`` symbols drawn i.i.d. uniform over all 2^16 values."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    return rng.integers(0, gf16.ORDER, size=length, dtype=np.uint16)


def random_nonzero(rng: np.random.Generator) -> int:
    """One symbol uniform over the 65535 nonzero field elements."""
    return int(rng.integers(1, gf16.ORDER))


def _rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form plus the pivot column list."""
    r = np.array(m, dtype=np.uint16, copy=True)
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        hit = -1
        for i in range(row, nrows):
            if r[i, col] != 0:
                hit = i
                break
        if hit < 0:
            continue
        if hit != row:
            r[[row, hit]] = r[[hit, row]]
        piv = int(r[row, col])
        if piv != 1:
            r[row] = kernels.scale(gf16.inv(piv), r[row])
        for i in range(nrows):
            if i != row and r[i, col] != 0:
                r[i] ^= kernels.scale(int(r[i, col]), r[row])
        pivots.append(col)
        row += 1
    return r, pivots


def rank(m: np.ndarray) -> int:
    """Rank over GF(2^16) via row reduction."""
    _, pivots = _rref(np.atleast_2d(m))
    return len(pivots)


def solve(m: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve m @ x = b for square m.

    ``b`` may be a vector or a matrix of stacked right-hand-side columns;
    the result has the same shape.  Raises SingularMatrix when m is rank
    deficient.
    """
    m = np.atleast_2d(m)
    nrows, ncols = m.shape
    if nrows != ncols:
        raise ValueError(f"solve needs a square matrix, got {nrows}x{ncols}")
    rhs = np.asarray(b, dtype=np.uint16)
    rhs2 = rhs.reshape(nrows, -1) if rhs.ndim == 1 else rhs
    if rhs2.shape[0] != nrows:
        raise ValueError("right-hand side length does not match the matrix")
    aug = np.concatenate([m.astype(np.uint16), rhs2], axis=1)
    red, pivots = _rref(aug)
    if pivots != list(range(nrows)):
        raise SingularMatrix(f"rank {len([p for p in pivots if p < ncols])} < {nrows}")
    x = red[:, ncols:]
    return x[:, 0] if rhs.ndim == 1 else x


def nullspace_vector(m: np.ndarray) -> np.ndarray:
    """A nonzero x with m @ x = 0, deterministic for a given m.

    Returns the kernel basis vector whose lowest-index free variable is
    set to 1 (all other free variables 0).  Raises TrivialNullspace when
    the matrix has full column rank.
    """
    m = np.atleast_2d(m)
    ncols = m.shape[1]
    red, pivots = _rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        raise TrivialNullspace(f"matrix has full column rank {ncols}")
    f = free[0]
    x = np.zeros(ncols, dtype=np.uint16)
    x[f] = 1
    # In characteristic 2 the back-substituted pivot value equals the
    # reduced entry itself: x_p = R[row, f] * x_f with x_f = 1.
    for row, p in enumerate(pivots):
        x[p] = red[row, f]
    return x


def matvec(m: np.ndarray, x: np.ndarray) -> np.ndarray:
    """m @ x over the field."""
    m = np.atleast_2d(m)
    return np.array([int(_dot(row, x)) for row in m], dtype=np.uint16)


def _dot(a: np.ndarray, b: np.ndarray) -> int:
    acc = 0
    for ai, bi in zip(a.tolist(), b.tolist()):
        acc ^= gf16.mul(ai, bi)
    return acc


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the field (small operands only)."""
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint16)
    for i in range(a.shape[0]):
        out[i] = kernels.combine(a[i], b)
    return out
