"""Exact Gaussian elimination over a :class:`~tautilt.field.Field`.

Pivoting is deterministic: the first nonzero entry in column order, then in
row order.  All bases returned here are therefore reproducible.
"""
from __future__ import annotations

import numpy as np

from .field import Field


def rref(F: Field, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns only the nonzero rows and the pivots."""
    M = np.array(M, dtype=F.dtype, copy=True)
    if M.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = F.reduce(M[r] * F.inv(M[r, c]))
        col = M[:, c].copy()
        col[r] = 0
        others = np.nonzero(col != 0)[0]
        if len(others):
            M[others] = F.reduce(M[others] - np.outer(col[others], M[r]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: Field, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: Field, M: np.ndarray) -> np.ndarray:
    """Column basis of ``{x : M x = 0}``, one column per free variable."""
    cols = M.shape[1]
    if M.shape[0] == 0:
        return F.eye(cols)
    R, piv = rref(F, M)
    free = [c for c in range(cols) if c not in set(piv)]
    N = F.zeros((cols, len(free)))
    for k, f in enumerate(free):
        N[f, k] = F.one
        for r, p in enumerate(piv):
            N[p, k] = F.reduce(-R[r, f])
    return N


def solve(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray | None:
    """A particular solution ``X`` of ``A X = B`` (free variables zero), or None."""
    vec = B.ndim == 1
    if vec:
        B = B.reshape(-1, 1)
    m, n = A.shape
    if m == 0:
        X = F.zeros((n, B.shape[1]))
        return X[:, 0] if vec else X
    R, piv = rref(F, np.concatenate([A, B], axis=1))
    if any(p >= n for p in piv):
        return None
    X = F.zeros((n, B.shape[1]))
    for r, p in enumerate(piv):
        X[p] = R[r, n:]
    return X[:, 0] if vec else X


def inverse(F: Field, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    X = solve(F, A, F.eye(n))
    if X is None or A.shape != (n, n) or rank(F, A) != n:
        raise ZeroDivisionError("matrix is singular")
    return X


def column_complement(F: Field, M: np.ndarray, ambient: int) -> tuple[list[int], list[int]]:
    """Pivot coordinates of ``colspan(M)`` and the standard complement coordinates."""
    if M.size == 0:
        return [], list(range(ambient))
    R, piv = rref(F, M.T)
    return piv, [c for c in range(ambient) if c not in set(piv)]


def quotient_map(F: Field, M: np.ndarray, ambient: int) -> tuple[np.ndarray, list[int]]:
    """Projection of ``F^ambient`` onto the coordinates complementary to ``colspan(M)``.

    Returns ``(Q, comp)`` with ``ker Q = colspan(M)`` and ``Q`` the identity on
    the standard vectors indexed by ``comp``.
    """
    if M.size == 0:
        return F.eye(ambient), list(range(ambient))
    R, piv = rref(F, M.T)
    comp = [c for c in range(ambient) if c not in set(piv)]
    Q = F.zeros((len(comp), ambient))
    for k, c in enumerate(comp):
        Q[k, c] = F.one
        for r, p in enumerate(piv):
            Q[k, p] = F.reduce(-R[r, c])
    return Q, comp


class RowSpace:
    """Incrementally grown row space kept in reduced echelon form."""

    def __init__(self, F: Field, width: int):
        self.F = F
        self.width = width
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        F = self.F
        v = np.array(v, dtype=F.dtype, copy=True)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                v = F.reduce(v - v[p] * row)
        return v

    def add(self, v: np.ndarray) -> bool:
        """Add ``v``; return False if it was already in the span."""
        F = self.F
        v = self.reduce(v)
        nz = np.nonzero(v != 0)[0]
        if len(nz) == 0:
            return False
        p = int(nz[0])
        v = F.reduce(v * F.inv(v[p]))
        for k, row in enumerate(self.rows):
            if row[p] != 0:
                self.rows[k] = F.reduce(row - row[p] * v)
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v) != 0)
