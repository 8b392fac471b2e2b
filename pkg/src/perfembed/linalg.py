"""Gaussian elimination over GF(q) for the small matrices of the constructions."""

from __future__ import annotations

import numpy as np

from .gf import FieldSpec


def rref(f: FieldSpec, mat) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form; zero rows dropped.

    Pivots are taken at the lowest available column, each pivot entry is 1
    and every pivot column is zero outside its pivot row.
    """
    r_mat = np.array(mat, dtype=np.int64, copy=True)
    if r_mat.ndim != 2:
        raise ValueError("rref expects a 2-D matrix")
    nrows, ncols = r_mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(r_mat[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            r_mat[[r, piv]] = r_mat[[piv, r]]
        r_mat[r] = f.vmul(f.inv(int(r_mat[r, c])), r_mat[r])
        factors = r_mat[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            r_mat[hit] = f.vsub(r_mat[hit], f.vmul(factors[hit, None], r_mat[r][None, :]))
        pivots.append(c)
        r += 1
    return r_mat[:r], tuple(pivots)


def rank(f: FieldSpec, mat) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    return len(rref(f, mat)[1])


def null_space(f: FieldSpec, mat) -> np.ndarray:
    """Basis of ``{x : mat @ x = 0}`` as rows, in reduced echelon form."""
    mat = np.asarray(mat, dtype=np.int64)
    ncols = mat.shape[1]
    red, pivots = rref(f, mat)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, j in enumerate(free):
        basis[t, j] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = f.neg(int(red[i, j]))
    if basis.shape[0] == 0:
        return basis
    return rref(f, basis)[0]
