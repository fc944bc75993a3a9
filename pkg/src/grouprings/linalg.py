"""Exact linear algebra over GF(p) on numpy int64 arrays.

Row vectors throughout. All routines reduce their inputs mod p, never mutate
them, and return canonical residues in ``range(p)``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    """Multiplicative inverses mod p; entry 0 is 0."""
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def as_matrix(rows, ncols: int | None = None) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.ndim == 1:
        if m.size == 0:
            return np.zeros((0, ncols or 0), dtype=np.int64)
        m = m.reshape(1, -1)
    if m.size == 0 and ncols is not None:
        return np.zeros((0, ncols), dtype=np.int64)
    return m


def rref(rows, p: int, ncols: int | None = None) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form with zero rows dropped.

    Returns ``(R, pivots)``; ``R`` is canonical for the row space, so two
    spans are equal exactly when their ``R`` arrays are equal.
    """
    a = as_matrix(rows, ncols) % p
    nrows, width = a.shape
    inv = inverse_table(p)
    pivots: list[int] = []
    r = 0
    for c in range(width):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * inv[a[r, c]] % p
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r].copy(), tuple(pivots)


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(m, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows, in rref) of ``{v : m @ v = 0}``."""
    m = as_matrix(m, ncols)
    width = m.shape[1] if ncols is None else ncols
    r, pivots = rref(m, p, width)
    free = [c for c in range(width) if c not in pivots]
    basis = np.zeros((len(free), width), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = -r[row, fc] % p
    return rref(basis, p, width)[0]


def span_contains(basis: np.ndarray, v, p: int) -> bool:
    """Whether ``v`` lies in the row space of an rref ``basis``."""
    v = np.asarray(v, dtype=np.int64) % p
    if basis.shape[0] == 0:
        return not v.any()
    return bool(not reduce_mod(basis, v, p).any())


def reduce_mod(basis: np.ndarray, v, p: int) -> np.ndarray:
    """Normal form of ``v`` (or rows of ``v``) modulo an rref row space."""
    v = np.asarray(v, dtype=np.int64) % p
    if basis.shape[0] == 0:
        return v
    pivots = first_nonzero_columns(basis)
    if v.ndim == 1:
        return (v - v[pivots] @ basis) % p
    return (v - v[:, pivots] @ basis) % p


def first_nonzero_columns(basis: np.ndarray) -> np.ndarray:
    return np.argmax(basis != 0, axis=1)


def solve(m, b, p: int) -> np.ndarray | None:
    """One solution of ``m @ x = b``, or None when inconsistent."""
    m = as_matrix(m) % p
    b = np.asarray(b, dtype=np.int64) % p
    aug = np.concatenate([m, b.reshape(-1, 1)], axis=1)
    r, pivots = rref(aug, p)
    n = m.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = r[row, n]
    return x


def batch_rref(mats, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-reduce a stack of matrices at once.

    Returns ``(R, ranks)`` where ``R[n]`` is the reduced row-echelon form of
    ``mats[n]`` (zero rows at the bottom) and ``ranks[n]`` its rank.
    """
    a = np.array(mats, dtype=np.int64) % p
    n, nrows, ncols = a.shape
    ranks = np.zeros(n, dtype=np.int64)
    if n == 0:
        return a, ranks
    inv = inverse_table(p)
    row_ids = np.arange(nrows)
    for c in range(ncols):
        col = a[:, :, c]
        mask = (col != 0) & (row_ids[None, :] >= ranks[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        piv = np.argmax(mask[sel], axis=1)
        rk = ranks[sel]
        pivot_rows = a[sel, piv].copy()
        a[sel, piv] = a[sel, rk]
        pivot_rows = pivot_rows * inv[pivot_rows[:, c]][:, None] % p
        a[sel, rk] = pivot_rows
        factors = a[sel, :, c].copy()
        factors[np.arange(sel.size), rk] = 0
        a[sel] = (a[sel] - factors[:, :, None] * pivot_rows[:, None, :]) % p
        ranks[sel] += 1
    return a, ranks


def batch_rank(mats, p: int) -> np.ndarray:
    return batch_rref(mats, p)[1]


def enumerate_vectors(p: int, dim: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Vectors of GF(p)^dim with codes in ``[start, stop)``, lexicographic order.

    Coordinate 0 is the most significant digit, matching itertools.product.
    """
    total = p**dim
    stop = total if stop is None else min(stop, total)
    codes = np.arange(start, stop, dtype=np.int64)
    weights = p ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    return (codes[:, None] // weights[None, :]) % p


def encode(vectors, p: int) -> np.ndarray:
    """Inverse of :func:`enumerate_vectors`."""
    v = np.asarray(vectors, dtype=np.int64) % p
    dim = v.shape[-1]
    weights = p ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    return v @ weights
