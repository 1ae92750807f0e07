"""Two-term silting objects, mutation, completion and the exchange graph.

Mutation of a silting object ``T = g ⊕ U`` at the summand ``g`` uses a
minimal left add(U)-approximation ``g -> U'``.  When its cone is again a
2-term complex, that cone is the other complement and ``g`` is the ``f+``
side (the one with ``E(f+, f-) = 0``).  Otherwise the minimal right
approximation ``U'' -> g`` is used and ``g`` is the ``f-`` side.

Edges of the exchange graph point from the object containing ``f+`` to the
one containing ``f-``.  This orientation is a convention of this package.
"""
from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import amat
from .algebra import PathBasisAlgebra
from .errors import (CapExceeded, ConeNotTwoTerm, NotAlmostComplete, NotRigid, PoolExhausted,
                     SwapCycle)
from .presentations import (ChainMap, Presentation, _block_top, chain_maps, decompose,
                            decorated_to_pres, direct_sum, e_dim, e_space, g_vector, hom_k,
                            index_in, is_rigid, iso_indecomposable, iso_test, minimize,
                            reduce_complex)
from .rep import DecoratedRep, Representation, coker, min_presentation

DEFAULT_VERTEX_CAP = 2000
DEFAULT_POOL_CAP = 2000


@dataclass(frozen=True, eq=False)
class SiltingObject:
    summands: tuple  # indecomposable Presentations, sorted by g-vector

    @property
    def algebra(self) -> PathBasisAlgebra:
        return self.summands[0].algebra

    @property
    def g_matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g_vector(s) for s in self.summands)

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.g_matrix))

    def presentation(self) -> Presentation:
        return direct_sum(*self.summands)

    def without(self, k: int) -> list:
        return [s for i, s in enumerate(self.summands) if i != k]

    def __repr__(self):
        return f"SiltingObject({list(self.g_matrix)})"


def make_silting(summands) -> SiltingObject:
    return SiltingObject(tuple(sorted(summands, key=g_vector)))


@dataclass(frozen=True, eq=False)
class SupportTauTiltingPair:
    module: Representation
    support_proj: tuple[int, ...]


@dataclass(eq=False)
class ExchangeData:
    f_plus: Presentation
    f_minus: Presentation
    d: int
    f_prime: Presentation         # middle term of f+ -> f' -> f-^d -> f+[1]
    f_double_prime: Presentation  # middle term of f+^d -> f'' -> f- -> f+^d[1]
    checks: dict = dc_field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())


@dataclass(eq=False)
class Edge:
    source: int
    target: int
    summand: int  # index of f+ among the summands of the source vertex
    data: ExchangeData


@dataclass(eq=False)
class ExchangeGraph:
    algebra: PathBasisAlgebra
    vertices: list
    edges: list
    complete: bool

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            deg[e.source] += 1
            deg[e.target] += 1
        return deg

    def is_regular(self) -> bool:
        return all(d == self.algebra.n for d in self.degrees())

    def pool(self) -> list:
        out = []
        for T in self.vertices:
            for s in T.summands:
                if index_in(s, out) < 0:
                    out.append(s)
        return out


# tests on a single presentation

def is_silting(f: Presentation) -> bool:
    if not is_rigid(f):
        return False
    parts = decompose(f)
    if len(parts) != f.algebra.n:
        return False
    return all(index_in(p, parts[:k]) < 0 for k, p in enumerate(parts))


def maximality_oracle(f: Presentation, pool) -> bool:
    """True iff adding any pool member outside Ind(f) destroys rigidity."""
    parts = decompose(f)
    for g in pool:
        if index_in(g, parts) >= 0:
            continue
        if e_dim(direct_sum(f, g), direct_sum(f, g)) == 0:
            return False
    return True


# approximations and cones

def _radical_endomorphisms(U: Presentation) -> list[ChainMap]:
    """Basis of the radical of the local ring of chain endomorphisms of U."""
    F = U.algebra.field
    C = chain_maps(U, U)
    traces = [F.reduce(np.trace(_block_top(c))) for c in C]
    t = next(k for k, tr in enumerate(traces) if tr != 0)
    inv = F.inv(traces[t])
    return [c.combine(C[t], 1, F.reduce(-tr * inv)) for k, (c, tr) in enumerate(zip(C, traces))
            if k != t]


def _radical_maps(U, i, j) -> list[ChainMap]:
    """Radical maps U[i] -> U[j] between summands of a basic object."""
    return _radical_endomorphisms(U[i]) if i == j else chain_maps(U[i], U[j])


def left_approximation(X: Presentation, U) -> tuple[Presentation, ChainMap]:
    """Minimal left add(U)-approximation ``X -> U'`` for indecomposable summands U."""
    alg = X.algebra
    homs = [chain_maps(X, Ui) for Ui in U]
    comps = []
    for i, Ui in enumerate(U):
        extra = [r.compose(h) for j in range(len(U)) for r in _radical_maps(U, j, i)
                 for h in homs[j]]
        comps += [(i, r) for r in hom_k(X, Ui, extra)]
    if not comps:
        tgt = Presentation.zero(alg)
        return tgt, ChainMap(X, tgt, amat.zeros(alg, (), X.p1), amat.zeros(alg, (), X.p0))
    tgt = direct_sum(*[U[i] for i, _ in comps])
    h1 = np.concatenate([r.h1 for _, r in comps], axis=0)
    h0 = np.concatenate([r.h0 for _, r in comps], axis=0)
    return tgt, ChainMap(X, tgt, h1, h0)


def right_approximation(X: Presentation, U) -> tuple[Presentation, ChainMap]:
    """Minimal right add(U)-approximation ``U'' -> X``."""
    alg = X.algebra
    homs = [chain_maps(Ui, X) for Ui in U]
    comps = []
    for i, Ui in enumerate(U):
        extra = [h.compose(r) for j in range(len(U)) for r in _radical_maps(U, i, j)
                 for h in homs[j]]
        comps += [(i, r) for r in hom_k(Ui, X, extra)]
    if not comps:
        src = Presentation.zero(alg)
        return src, ChainMap(src, X, amat.zeros(alg, X.p1, ()), amat.zeros(alg, X.p0, ()))
    src = direct_sum(*[U[i] for i, _ in comps])
    h1 = np.concatenate([r.h1 for _, r in comps], axis=1)
    h0 = np.concatenate([r.h0 for _, r in comps], axis=1)
    return src, ChainMap(src, X, h1, h0)


def cone(phi: ChainMap):
    """Minimized cone of a chain map between 2-term complexes (degrees -2, -1, 0)."""
    alg = phi.source.algebra
    X, Y = phi.source, phi.target
    terms = [list(X.p1), list(X.p0) + list(Y.p1), list(Y.p0)]
    d2 = np.concatenate([amat.neg(alg, X.matrix), phi.h1], axis=0)
    d1 = np.concatenate([phi.h0, Y.matrix], axis=1)
    return reduce_complex(alg, terms, [d2, d1])


def _collapse(Y: Presentation) -> Presentation:
    parts = decompose(Y)
    if not parts or not all(iso_indecomposable(parts[0], p) for p in parts[1:]):
        raise ConeNotTwoTerm(f"cone is not a power of one indecomposable: {parts}")
    return parts[0]


def other_complement(U, g: Presentation) -> tuple[Presentation, bool]:
    """The complement of the almost complete U other than g; flag is True if g is f+."""
    _, phi = left_approximation(g, U)
    terms, diffs = cone(phi)
    if not terms[0]:
        return _collapse(Presentation(g.algebra, terms[1], terms[2], diffs[1])), True
    _, psi = right_approximation(g, U)
    terms, diffs = cone(psi)
    if terms[2]:
        raise ConeNotTwoTerm("neither approximation cone is 2-term")
    return _collapse(Presentation(g.algebra, terms[0], terms[1], diffs[0])), False


def _extension(alg, lower: Presentation, upper: Presentation, maps, lower_copies: bool):
    """Middle term of the extension with sub ``upper`` (copies) and quotient ``lower``.

    ``maps`` are A-matrices ``P1(lower) -> P0(upper)``.  With ``lower_copies``
    the lower term is repeated once per map (universal extension by
    ``lower^d``); otherwise the upper one is.
    """
    d = len(maps)
    if lower_copies:
        lows, ups = [lower] * d, [upper]
        U = np.concatenate(maps, axis=1) if d else amat.zeros(alg, upper.p0, ())
        blocks = [[direct_sum(*lows).matrix if d else None, None], [U, upper.matrix]]
    else:
        lows, ups = [lower], [upper] * d
        U = np.concatenate(maps, axis=0) if d else amat.zeros(alg, (), lower.p1)
        blocks = [[lower.matrix, None], [U, direct_sum(*ups).matrix if d else None]]
    p1 = sum((x.p1 for x in lows), ()) + sum((x.p1 for x in ups), ())
    p0 = sum((x.p0 for x in lows), ()) + sum((x.p0 for x in ups), ())
    lo1 = sum(len(x.p1) for x in lows)
    lo0 = sum(len(x.p0) for x in lows)
    M = amat.block(alg, blocks, [lo0, len(p0) - lo0], [lo1, len(p1) - lo1])
    return Presentation(alg, p1, p0, M)


def exchange_data(f_plus: Presentation, f_minus: Presentation, U) -> ExchangeData:
    """Exchange triangles for the two complements of U, with their checks."""
    alg = f_plus.algebra
    E = e_space(f_minus, f_plus)
    d = E.dimension
    raw_prime = _extension(alg, f_minus, f_plus, E.basis, lower_copies=True)
    raw_dprime = _extension(alg, f_minus, f_plus, E.basis, lower_copies=False)
    f_prime, f_dprime = minimize(raw_prime), minimize(raw_dprime)

    # cone of the inclusion f+ -> f' must be f-^d
    k1, k0 = len(raw_prime.p1) - len(f_plus.p1), len(raw_prime.p0) - len(f_plus.p0)
    h1 = np.concatenate([amat.zeros(alg, raw_prime.p1[:k1], f_plus.p1),
                         amat.identity(alg, f_plus.p1)], axis=0)
    h0 = np.concatenate([amat.zeros(alg, raw_prime.p0[:k0], f_plus.p0),
                         amat.identity(alg, f_plus.p0)], axis=0)
    terms, diffs = cone(ChainMap(f_plus, raw_prime, h1, h0))
    cone_ok = False
    if not terms[0]:
        parts = decompose(Presentation(alg, terms[1], terms[2], diffs[1]))
        cone_ok = len(parts) == d and all(iso_indecomposable(p, f_minus) for p in parts)

    Ind = list(U)
    checks = {
        "d_positive": d >= 1,
        "E(f+,f-)=0": e_dim(f_plus, f_minus) == 0,
        "E(f+,f')=0": e_dim(f_plus, f_prime) == 0,
        "E(f'',f-)=0": e_dim(f_dprime, f_minus) == 0,
        "f'+f- rigid": is_rigid(direct_sum(f_prime, f_minus)),
        "f''+f+ rigid": is_rigid(direct_sum(f_dprime, f_plus)),
        "cone=f-^d": cone_ok,
    }
    same_middle = iso_test(f_prime, f_dprime)
    if d == 1:
        checks["f'=f'' in add(Ind)"] = same_middle and all(
            index_in(p, Ind) >= 0 for p in decompose(f_prime))
    else:
        checks["f'!=f''"] = not same_middle
    return ExchangeData(f_plus, f_minus, d, f_prime, f_dprime, checks)


def _mutate(T: SiltingObject, k: int, with_data: bool):
    U = T.without(k)
    g = T.summands[k]
    other, g_is_plus = other_complement(U, g)
    data = None
    if with_data:
        fp, fm = (g, other) if g_is_plus else (other, g)
        data = exchange_data(fp, fm, U)
    return make_silting(U + [other]), other, g_is_plus, data


def mutate(T: SiltingObject, k: int, with_data: bool = True):
    """Mutate T at its k-th summand; returns ``(T', ExchangeData or None)``."""
    T2, _, _, data = _mutate(T, k, with_data)
    return T2, data


def complements(f_almost: Presentation, engine: "SiltingEngine | None" = None) -> ExchangeData:
    """Both complements of an almost complete rigid presentation, with exchange data."""
    alg = f_almost.algebra
    U = decompose(f_almost)
    if len(U) != alg.n - 1:
        raise NotAlmostComplete(f"{len(U)} summands, expected {alg.n - 1}")
    if any(index_in(p, U[:k]) >= 0 for k, p in enumerate(U)):
        raise NotAlmostComplete("presentation is not basic")
    if not is_rigid(f_almost):
        raise NotRigid("presentation is not rigid")
    T = complete_to_silting(f_almost, engine)
    g = next(s for s in T.summands if index_in(s, U) < 0)
    other, g_is_plus = other_complement(U, g)
    fp, fm = (g, other) if g_is_plus else (other, g)
    return exchange_data(fp, fm, U)


# enumeration engine

class SiltingEngine:
    """Breadth-first mutation from ``⊕ P_v[0]`` plus the pool of indecomposables seen."""

    def __init__(self, algebra: PathBasisAlgebra, cap_vertices: int = DEFAULT_VERTEX_CAP,
                 cap_pool: int = DEFAULT_POOL_CAP, with_data: bool = True):
        self.algebra = algebra
        self.cap_vertices = cap_vertices
        self.cap_pool = cap_pool
        self.with_data = with_data
        self.vertices: list[SiltingObject] = []
        self.index: dict = {}
        self.edges: list[Edge] = []
        self.pool: list[Presentation] = []
        self._done: set = set()
        self.complete = False
        self.capped = False
        start = make_silting([Presentation.projective(algebra, v) for v in range(algebra.n)])
        self._add(start)
        self.frontier = [0]

    def _add(self, T: SiltingObject) -> int:
        found = self.index.get(T.key)
        if found is not None:
            if not iso_test(self.vertices[found].presentation(), T.presentation()):
                raise RuntimeError("g-matrix collision between non-isomorphic silting objects")
            return found
        self.index[T.key] = len(self.vertices)
        self.vertices.append(T)
        for s in T.summands:
            if index_in(s, self.pool) < 0:
                self.pool.append(s)
        return len(self.vertices) - 1

    def expand_level(self) -> bool:
        """Process one BFS level; False once nothing is left or a cap was hit."""
        if self.complete or self.capped:
            return False
        new = []
        for i in self.frontier:
            T = self.vertices[i]
            for k in range(len(T.summands)):
                if (i, k) in self._done:
                    continue
                T2, other, g_is_plus, data = _mutate(T, k, self.with_data)
                if T2.key not in self.index and (len(self.vertices) >= self.cap_vertices
                                                 or len(self.pool) >= self.cap_pool):
                    self.capped = True
                    return False
                is_new = T2.key not in self.index
                j = self._add(T2)
                if is_new:
                    new.append(j)
                k2 = next(m for m, t in enumerate(self.vertices[j].summands)
                          if g_vector(t) == g_vector(other))
                self._done.update({(i, k), (j, k2)})
                if g_is_plus:
                    self.edges.append(Edge(i, j, k, data))
                else:
                    self.edges.append(Edge(j, i, k2, data))
        self.frontier = sorted(new, key=lambda j: self.vertices[j].key)
        if not self.frontier:
            self.complete = True
        return bool(self.frontier)

    def run(self) -> "SiltingEngine":
        while self.expand_level():
            pass
        return self

    def graph(self) -> ExchangeGraph:
        return ExchangeGraph(self.algebra, list(self.vertices), list(self.edges),
                             self.complete and not self.capped)


_ENGINES: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def engine_for(algebra: PathBasisAlgebra, **kw) -> SiltingEngine:
    eng = _ENGINES.get(algebra)
    if eng is None or kw:
        eng = SiltingEngine(algebra, **kw)
        if not kw:
            _ENGINES[algebra] = eng
    return eng


def exchange_graph(algebra: PathBasisAlgebra, cap: int = DEFAULT_VERTEX_CAP,
                   strict: bool = False, with_data: bool = True) -> ExchangeGraph:
    """Enumerate all 2-term silting objects reachable from ``⊕ P_v[0]``.

    ``complete`` is False if the cap stopped the search; with ``strict`` a
    :class:`CapExceeded` carrying the partial graph is raised instead.
    """
    eng = SiltingEngine(algebra, cap_vertices=cap, with_data=with_data).run()
    g = eng.graph()
    if strict and not g.complete:
        raise CapExceeded(f"more than {cap} silting objects", partial=g)
    return g


def complete_to_silting(f: Presentation, engine: SiltingEngine | None = None) -> SiltingObject:
    """Greedily extend a rigid presentation by pool members until it has n summands."""
    alg = f.algebra
    if not is_rigid(f):
        raise NotRigid("only rigid presentations can be completed")
    current = decompose(f)
    current = [p for k, p in enumerate(current) if index_in(p, current[:k]) < 0]
    n = alg.n
    if len(current) == n:
        return make_silting(current)
    eng = engine or engine_for(alg)
    while True:
        for g in list(eng.pool):
            if index_in(g, current) >= 0:
                continue
            if is_rigid(direct_sum(*current, g)):
                current.append(g)
                if len(current) == n:
                    return make_silting(current)
        if not eng.expand_level():
            reason = "closed pool did not complete the presentation" if eng.complete \
                else "cap reached before completion"
            raise PoolExhausted(reason, partial=current)


def complete_to_tau_tilting(M: Representation, engine: SiltingEngine | None = None) -> Representation:
    """A τ-tilting module having M as a direct summand."""
    alg = M.algebra
    f = min_presentation(M)
    T = complete_to_silting(f, engine)
    for _ in range(alg.n + 1):
        shifted = [k for k, s in enumerate(T.summands) if s.is_shifted_projective]
        if not shifted:
            parts = list(T.summands)
            return coker(direct_sum(*parts))
        T, _ = mutate(T, shifted[0], with_data=False)
    raise SwapCycle("shifted summands kept reappearing")


def silting_to_pair(T: SiltingObject) -> SupportTauTiltingPair:
    alg = T.algebra
    support = [0] * alg.n
    rest = []
    for s in T.summands:
        if s.is_shifted_projective:
            for v in s.p1:
                support[v] += 1
        else:
            rest.append(s)
    module = coker(direct_sum(*rest)) if rest else Representation.zero(alg)
    return SupportTauTiltingPair(module, tuple(support))


def pair_to_silting(p: SupportTauTiltingPair) -> SiltingObject:
    f = decorated_to_pres(DecoratedRep(p.module, tuple(p.support_proj)))
    parts = decompose(f)
    if len(parts) != f.algebra.n or not is_rigid(f):
        raise NotRigid("pair is not support τ-tilting")
    return make_silting(parts)


def integer_det(rows) -> int:
    n = len(rows)
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            fac = M[r][c] / M[c][c]
            M[r] = [a - fac * b for a, b in zip(M[r], M[c])]
    return int(det)


def summand_counts(T: SiltingObject) -> Counter:
    return Counter(g_vector(s) for s in T.summands)
