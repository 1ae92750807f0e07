"""Matrices over A describing maps between sums of indecomposable projectives.

A map ``⊕_j P_{cols[j]} -> ⊕_i P_{rows[i]}`` is an array of shape
``(len(rows), len(cols), dim A)`` whose entry ``(i, j)`` lies in
``e_{rows[i]} A e_{cols[j]}``.  Composition is the matrix product with
entries multiplied in A.
"""
from __future__ import annotations

import numpy as np

from .algebra import PathBasisAlgebra


def zeros(alg: PathBasisAlgebra, rows, cols) -> np.ndarray:
    return alg.field.zeros((len(rows), len(cols), alg.dim))


def identity(alg: PathBasisAlgebra, verts) -> np.ndarray:
    out = zeros(alg, verts, verts)
    for i, v in enumerate(verts):
        out[i, i, alg.idempotents[v]] = alg.field.one
    return out


def matmul(alg: PathBasisAlgebra, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    F = alg.field
    m, l, d = X.shape
    r = Y.shape[1]
    if m == 0 or r == 0 or l == 0:
        return F.zeros((m, r, d))
    W = F.reduce(np.tensordot(X, alg.mult, axes=([2], [0])))  # m l b c
    Z = np.tensordot(W, Y, axes=([1, 2], [0, 2]))             # m c r
    return F.reduce(Z.transpose(0, 2, 1))


def add(alg, *Xs):
    out = Xs[0]
    for X in Xs[1:]:
        out = out + X
    return alg.field.reduce(out)


def scale(alg, c, X):
    return alg.field.reduce(X * c)


def neg(alg, X):
    return alg.field.reduce(-X)


def block(alg, blocks, row_lens, col_lens):
    """Assemble a block matrix; ``None`` entries are zero blocks."""
    out = alg.field.zeros((sum(row_lens), sum(col_lens), alg.dim))
    r0 = 0
    for bi, rl in enumerate(row_lens):
        c0 = 0
        for bj, cl in enumerate(col_lens):
            B = blocks[bi][bj]
            if B is not None and rl and cl:
                out[r0:r0 + rl, c0:c0 + cl] = B
            c0 += cl
        r0 += rl
    return out


def coord_index(alg: PathBasisAlgebra, rows, cols) -> list[tuple[int, int, int]]:
    """Coordinates of Hom(⊕P_cols, ⊕P_rows): triples (i, j, basis index)."""
    return [(i, j, b) for i, v in enumerate(rows) for j, w in enumerate(cols)
            for b in alg.corner[v][w]]


def to_coords(X: np.ndarray, index) -> np.ndarray:
    if not index:
        return X.reshape(-1)[:0]
    ii, jj, bb = (np.array(t) for t in zip(*index))
    return X[ii, jj, bb]


def from_coords(alg, vec, index, rows, cols) -> np.ndarray:
    out = zeros(alg, rows, cols)
    for (i, j, b), c in zip(index, vec):
        out[i, j, b] = c
    return out


def unit_matrices(alg, rows, cols):
    """Yield ``(coordinate, matrix)`` for the standard basis of Hom(⊕P_cols, ⊕P_rows)."""
    for k, (i, j, b) in enumerate(coord_index(alg, rows, cols)):
        X = zeros(alg, rows, cols)
        X[i, j, b] = alg.field.one
        yield k, X


def top(alg: PathBasisAlgebra, X: np.ndarray, rows, cols) -> np.ndarray:
    """Degree-zero part as a k-matrix: coefficient of e_v where rows[i] == cols[j] == v."""
    F = alg.field
    T = F.zeros((len(rows), len(cols)))
    for i, v in enumerate(rows):
        for j, w in enumerate(cols):
            if v == w:
                T[i, j] = X[i, j, alg.idempotents[v]]
    return T


def lift_scalar(alg, T: np.ndarray, rows, cols) -> np.ndarray:
    """Inverse of :func:`top` on block-diagonal k-matrices."""
    out = zeros(alg, rows, cols)
    for i, v in enumerate(rows):
        for j, w in enumerate(cols):
            if v == w and T[i, j] != 0:
                out[i, j, alg.idempotents[v]] = T[i, j]
    return out


def is_zero(X: np.ndarray) -> bool:
    return not np.any(X != 0)


def inverse(alg: PathBasisAlgebra, X: np.ndarray, rows, cols) -> np.ndarray:
    """Inverse of an isomorphism ``⊕P_cols -> ⊕P_rows``.

    Inverts the degree-zero part over k and sums the (terminating) Neumann
    series for the radical remainder.
    """
    from .linalg import inverse as kinv
    F = alg.field
    if len(rows) != len(cols):
        raise ZeroDivisionError("non-square map between projectives")
    if not rows:
        return zeros(alg, cols, rows)
    D = lift_scalar(alg, kinv(F, top(alg, X, rows, cols)), cols, rows)
    # 1 - D X has radical entries, so its powers vanish by rad^N = 0
    R = F.reduce(identity(alg, cols) - matmul(alg, D, X))
    total = identity(alg, cols)
    power = identity(alg, cols)
    for _ in range(alg.spec.nilpotency_bound + 1):
        power = matmul(alg, power, R)
        if is_zero(power):
            break
        total = F.reduce(total + power)
    else:
        raise ZeroDivisionError("radical part failed to vanish")
    return matmul(alg, total, D)


def degree_profile(alg: PathBasisAlgebra, X: np.ndarray) -> tuple[int, ...]:
    """Histogram of path lengths over the nonzero coefficients of X."""
    if X.size == 0:
        return ()
    nz = np.nonzero(X != 0)
    counts = np.bincount(alg.degree[nz[2]], minlength=alg.spec.nilpotency_bound)
    return tuple(int(c) for c in counts)
