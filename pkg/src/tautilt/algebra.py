"""Bound quiver algebras A = kQ/I given by a reduced path basis.

Conventions (used everywhere in the package):

* paths compose left to right: for arrows ``a: i -> j`` and ``b: j -> k`` the
  word ``ab`` is a path ``i -> k`` and the product ``a * b`` is that path;
* modules are right modules, ``P_v = e_v A`` and
  ``Hom(P_v, P_w) = e_w A e_v`` (paths from ``w`` to ``v``), acting by left
  multiplication.  So composition of maps between projectives is the algebra
  product in the usual matrix order.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .errors import InconsistentBound, NonAdmissibleRelation, PathExplosion
from .field import Field
from .linalg import rref

PATH_CAP = 5000


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int, int], ...]  # (arrow_id, source, target)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        ids = sorted(a[0] for a in self.arrows)
        if ids != list(range(len(self.arrows))):
            raise ValueError("arrow ids must be distinct and dense from 0")
        for _, s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow endpoint out of range: {s} -> {t}")

    @cached_property
    def source(self) -> dict[int, int]:
        return {a: s for a, s, _ in self.arrows}

    @cached_property
    def target(self) -> dict[int, int]:
        return {a: t for a, _, t in self.arrows}

    def is_path(self, word) -> bool:
        return all(self.target[a] == self.source[b] for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class RelationSpec:
    terms: tuple[tuple[object, tuple[int, ...]], ...]  # (coefficient, arrow word)


@dataclass(frozen=True)
class AlgebraSpec:
    quiver: Quiver
    relations: tuple[RelationSpec, ...] = ()
    nilpotency_bound: int = 2
    field: Field = dc_field(default_factory=Field)


@dataclass(frozen=True)
class BasisPath:
    source: int
    target: int
    arrows: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)


class PathBasisAlgebra:
    """Finite-dimensional algebra with a path basis and structure constants.

    ``mult[i, j]`` holds the coordinates of ``basis[i] * basis[j]``.
    Instances are immutable once built.
    """

    def __init__(self, spec: AlgebraSpec, basis: list[BasisPath], mult: np.ndarray,
                 normal_forms: dict):
        self.spec = spec
        self.field: Field = spec.field
        self.quiver = spec.quiver
        self.n = spec.quiver.vertex_count
        self.basis = basis
        self.dim = len(basis)
        self.mult = mult
        self._normal_forms = normal_forms
        self.index = {b.arrows: i for i, b in enumerate(basis) if b.length}
        self.idempotents = [i for i, b in enumerate(basis) if b.length == 0]
        self.degree = np.array([b.length for b in basis], dtype=int)
        # corner[v][w]: basis indices spanning e_v A e_w (paths v -> w)
        self.corner = [[[i for i, b in enumerate(basis) if b.source == v and b.target == w]
                        for w in range(self.n)] for v in range(self.n)]
        self._mult_flat = mult.reshape(self.dim, self.dim * self.dim)

    def __repr__(self):
        return f"PathBasisAlgebra(n={self.n}, dim={self.dim}, {self.field!r})"

    # elements

    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def unit(self, i: int) -> np.ndarray:
        x = self.zero()
        x[i] = self.field.one
        return x

    def e(self, v: int) -> np.ndarray:
        return self.unit(self.idempotents[v])

    def one(self) -> np.ndarray:
        x = self.zero()
        for i in self.idempotents:
            x[i] = self.field.one
        return x

    def path(self, word) -> np.ndarray:
        """Normal form of an arrow word (zero if it is not a path)."""
        word = tuple(word)
        if not word:
            raise ValueError("use e(v) for trivial paths")
        if not self.quiver.is_path(word) or len(word) >= self.spec.nilpotency_bound:
            return self.zero()
        return self._normal_forms[word].copy()

    def arrow(self, a: int) -> np.ndarray:
        return self.path((a,))

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        F = self.field
        t = F.reduce(F.matmul(x.reshape(1, -1), self._mult_flat)).reshape(self.dim, self.dim)
        return F.reduce(F.matmul(y.reshape(1, -1), t)).reshape(self.dim)

    def label(self, i: int) -> str:
        b = self.basis[i]
        if b.length == 0:
            return f"e{b.source}"
        return "*".join(f"a{a}" for a in b.arrows)

    def format_element(self, x: np.ndarray) -> str:
        terms = []
        for i in np.nonzero(x != 0)[0]:
            c = self.field.to_str(x[i])
            terms.append(self.label(i) if c == "1" else f"{c}{self.label(i)}")
        return " + ".join(terms) if terms else "0"

    def hom_proj(self, v: int, w: int) -> list[int]:
        """Basis of Hom(P_v, P_w) = e_w A e_v as basis indices."""
        if not (0 <= v < self.n and 0 <= w < self.n):
            raise IndexError("vertex out of range")
        return list(self.corner[w][v])

    @cached_property
    def is_semisimple(self) -> bool:
        return self.dim == self.n

    @cached_property
    def generous_bound(self) -> bool:
        """True if every path of length N-1 already vanishes in A."""
        N = self.spec.nilpotency_bound
        return N == 1 or not any(b.length == N - 1 for b in self.basis)

    def check_associativity(self) -> bool:
        F = self.field
        d = self.dim
        left = F.reduce(np.tensordot(self.mult, self.mult, axes=([2], [0])))   # (ab)c : i j k l
        right = F.reduce(np.tensordot(self.mult, self.mult, axes=([2], [1])))  # a(bc) : j k i l
        right = right.transpose(2, 0, 1, 3)
        return bool(np.all(F.reduce(left - right) == 0)) if d else True


def _enumerate_paths(quiver: Quiver, bound: int, cap: int) -> list[tuple]:
    paths = [(v, ()) for v in range(quiver.vertex_count)]
    frontier = [(a,) for a, _, _ in quiver.arrows] if bound > 1 else []
    while frontier:
        paths.extend(frontier)
        if len(paths) > cap:
            raise PathExplosion(f"more than {cap} paths of length < {bound}")
        nxt = []
        for w in frontier:
            if len(w) + 1 >= bound:
                continue
            t = quiver.target[w[-1]]
            nxt.extend(w + (a,) for a, s, _ in quiver.arrows if s == t)
        frontier = nxt
    return paths


def build_algebra(spec: AlgebraSpec, path_cap: int = PATH_CAP) -> PathBasisAlgebra:
    """Reduce the span of paths of length < N modulo the ideal of the relations."""
    Q = spec.quiver
    F = spec.field
    N = spec.nilpotency_bound
    if N < 1:
        raise ValueError("nilpotency bound must be >= 1")
    rels = []
    for r in spec.relations:
        if not r.terms:
            continue
        ends = set()
        terms = []
        for coeff, word in r.terms:
            word = tuple(word)
            if len(word) < 2:
                raise NonAdmissibleRelation(f"relation term {word} has length < 2")
            if any(a not in Q.source for a in word) or not Q.is_path(word):
                raise NonAdmissibleRelation(f"relation term {word} is not a path")
            ends.add((Q.source[word[0]], Q.target[word[-1]]))
            if len(word) >= N:
                warnings.warn(f"relation term {word} has length >= N={N}", InconsistentBound)
            terms.append((F(coeff), word))
        if len(ends) > 1:
            raise NonAdmissibleRelation("relation paths are not parallel")
        rels.append((terms, ends.pop()))

    raw = _enumerate_paths(Q, N, path_cap)
    nontrivial = sorted((w for w in raw if w[-1] != ()), key=lambda w: (len(w), w))
    # columns ordered largest first, so pivots are leading terms under deglex
    cols = sorted(nontrivial, key=lambda w: (len(w), w), reverse=True)
    col_of = {w: i for i, w in enumerate(cols)}

    by_end = {}
    for w in nontrivial:
        by_end.setdefault((Q.source[w[0]], Q.target[w[-1]]), []).append(w)
    into = {v: [()] + [w for w in nontrivial if Q.target[w[-1]] == v] for v in range(Q.vertex_count)}
    out_of = {v: [()] + [w for w in nontrivial if Q.source[w[0]] == v] for v in range(Q.vertex_count)}

    rows = []
    for terms, (s, t) in rels:
        minlen = min(len(w) for _, w in terms)
        for p in into[s]:
            for q in out_of[t]:
                if len(p) + len(q) + minlen >= N:
                    continue
                row = F.zeros(len(cols))
                for c, w in terms:
                    full = p + w + q
                    if len(full) < N:
                        row[col_of[full]] = F.reduce(row[col_of[full]] + c)
                if np.any(row != 0):
                    rows.append(row)
    if rows:
        R, piv = rref(F, np.array(rows, dtype=F.dtype))
    else:
        R, piv = F.zeros((0, len(cols))), []
    pivset = set(piv)

    basis = [BasisPath(v, v, ()) for v in range(Q.vertex_count)]
    basis += [BasisPath(Q.source[w[0]], Q.target[w[-1]], w)
              for w in nontrivial if col_of[w] not in pivset]
    idx = {b.arrows: i for i, b in enumerate(basis) if b.length}
    dim = len(basis)

    normal = {}
    pivot_row = {p: r for r, p in enumerate(piv)}
    for w in nontrivial:
        vec = F.zeros(dim)
        c = col_of[w]
        if c in pivset:
            row = R[pivot_row[c]]
            for c2 in np.nonzero(row != 0)[0]:
                if c2 != c:
                    vec[idx[cols[c2]]] = F.reduce(-row[c2])
        else:
            vec[idx[w]] = F.one
        normal[w] = vec

    mult = F.zeros((dim, dim, dim))
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if a.target != b.source:
                continue
            if a.length == 0:
                mult[i, j, j] = F.one
            elif b.length == 0:
                mult[i, j, i] = F.one
            elif a.length + b.length < N:
                mult[i, j] = normal[a.arrows + b.arrows]
    return PathBasisAlgebra(spec, basis, mult, normal)
