"""The presentation value type: a 2-term complex ``P1 -> P0`` of projectives."""
from __future__ import annotations

import numpy as np

from . import amat
from .algebra import PathBasisAlgebra
from .errors import AlgebraMismatch


class Presentation:
    """``f: ⊕_j P_{p1[j]} -> ⊕_i P_{p0[i]}``.

    ``matrix[i, j]`` is the coordinate vector of an element of
    ``e_{p0[i]} A e_{p1[j]}``.  An empty ``p0`` encodes a shifted projective
    ``P[1]``; an empty ``p1`` a projective in degree 0.
    """

    __slots__ = ("algebra", "p1", "p0", "matrix", "_key")

    def __init__(self, algebra: PathBasisAlgebra, p1, p0, matrix=None):
        self.algebra = algebra
        self.p1 = tuple(int(v) for v in p1)
        self.p0 = tuple(int(v) for v in p0)
        if matrix is None:
            matrix = amat.zeros(algebra, self.p0, self.p1)
        matrix = np.asarray(matrix, dtype=algebra.field.dtype)
        if matrix.shape != (len(self.p0), len(self.p1), algebra.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match terms")
        for i, v in enumerate(self.p0):
            for j, w in enumerate(self.p1):
                allowed = set(algebra.corner[v][w])
                bad = [b for b in np.nonzero(matrix[i, j] != 0)[0] if b not in allowed]
                if bad:
                    raise ValueError(f"entry ({i},{j}) leaves e_{v} A e_{w}")
        self.matrix = matrix
        self._key = None

    # constructors

    @classmethod
    def projective(cls, algebra, v: int) -> "Presentation":
        """``P_v`` in degree 0, i.e. ``0 -> P_v``."""
        return cls(algebra, (), (v,))

    @classmethod
    def shifted(cls, algebra, v: int) -> "Presentation":
        """``P_v[1]``, i.e. ``P_v -> 0``."""
        return cls(algebra, (v,), ())

    @classmethod
    def zero(cls, algebra) -> "Presentation":
        return cls(algebra, (), ())

    @classmethod
    def from_entries(cls, algebra, p1, p0, entries) -> "Presentation":
        """Build from a nested list of algebra elements (coordinate vectors or 0)."""
        M = amat.zeros(algebra, p0, p1)
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                if not (isinstance(x, int) and x == 0):
                    M[i, j] = x
        return cls(algebra, p1, p0, M)

    # structure

    @property
    def is_zero(self) -> bool:
        return not self.p0 and not self.p1

    @property
    def is_shifted_projective(self) -> bool:
        return bool(self.p1) and not self.p0

    def __repr__(self):
        return f"Presentation(p1={list(self.p1)}, p0={list(self.p0)})"

    def describe(self) -> str:
        alg = self.algebra
        rows = ["[" + ", ".join(alg.format_element(self.matrix[i, j]) for j in range(len(self.p1))) + "]"
                for i in range(len(self.p0))]
        return (f"{'+'.join(f'P{v}' for v in self.p1) or '0'} -> "
                f"{'+'.join(f'P{v}' for v in self.p0) or '0'}  " + " ".join(rows))

    def key(self) -> tuple:
        """Exact identity of the encoded matrix (not an isomorphism invariant)."""
        if self._key is None:
            self._key = (self.p1, self.p0, tuple(self.algebra.field.to_str(x)
                                                 for x in self.matrix.reshape(-1)))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Presentation) and other.algebra is self.algebra \
            and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def check_same_algebra(self, other: "Presentation"):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("presentations over different algebras")


def direct_sum(*fs: Presentation) -> Presentation:
    if not fs:
        raise ValueError("direct_sum needs at least one summand")
    alg = fs[0].algebra
    for f in fs[1:]:
        fs[0].check_same_algebra(f)
    p1 = sum((f.p1 for f in fs), ())
    p0 = sum((f.p0 for f in fs), ())
    M = amat.zeros(alg, p0, p1)
    r = c = 0
    for f in fs:
        M[r:r + len(f.p0), c:c + len(f.p1)] = f.matrix
        r += len(f.p0)
        c += len(f.p1)
    return Presentation(alg, p1, p0, M)
