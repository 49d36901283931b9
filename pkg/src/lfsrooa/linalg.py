"""Gaussian elimination over F_q on integer-coded numpy arrays."""

from __future__ import annotations

import numpy as np

from .field import FieldSpec


def row_reduce(mat, F: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``mat`` over F and its pivot columns."""
    a = np.array(mat, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = add[a[i], mul[neg[a[i, c]], a[r]]]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat, F: FieldSpec) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    return len(row_reduce(mat, F)[1])


def batch_full_rank(mats: np.ndarray, F: FieldSpec) -> np.ndarray:
    """For a (B, t, t) stack of matrices over F, flag the invertible ones."""
    a = np.array(mats, dtype=np.int64, copy=True)
    B, t, t2 = a.shape
    if t != t2:
        raise ValueError("expected square matrices")
    ok = np.ones(B, dtype=bool)
    mul, sub, inv = F.mul_table, F.sub_table, F.inv_table
    lanes = np.arange(B)
    for k in range(t):
        col = a[:, k:, k]
        has = col != 0
        found = has.any(axis=1)
        ok &= found
        piv = k + np.argmax(has, axis=1)
        swap = piv != k
        if swap.any():
            idx = lanes[swap]
            top = a[idx, k].copy()
            a[idx, k] = a[idx, piv[swap]]
            a[idx, piv[swap]] = top
        if k == t - 1:
            break
        # singular lanes have a zero pivot; inv_table[0] == 0 keeps them in range
        pinv = inv[a[:, k, k]]
        factor = mul[a[:, k + 1 :, k], pinv[:, None]]
        a[:, k + 1 :, :] = sub[a[:, k + 1 :, :], mul[factor[:, :, None], a[:, k, None, :]]]
    return ok
