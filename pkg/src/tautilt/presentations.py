"""Two-term complex calculus: E-invariant, minimization, decomposition, g-vectors.

For presentations ``f1: P1 -> P0`` and ``f2: Q1 -> Q0`` the E-space is

    E(f1, f2) = Hom(P1, Q0) / ( {g f1 : g in Hom(P0, Q0)} + {f2 h : h in Hom(P1, Q1)} ),

the chain maps ``f1[-1] -> f2`` modulo null-homotopic ones.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np

from . import amat
from .algebra import PathBasisAlgebra
from .errors import IdempotentSearchExhausted
from .field import Field
from .linalg import RowSpace, inverse as kinverse, nullspace, rank, rref, solve
from .rep import DecoratedRep, Representation, coker, direct_sum as rep_sum, min_presentation
from .twoterm import Presentation, direct_sum

__all__ = [
    "ChainMap", "EResult", "EndAlgebra", "Presentation", "direct_sum", "e_space", "e_dim",
    "is_rigid", "minimize", "reduce_complex", "chain_maps", "null_homotopic", "hom_k",
    "end_algebra", "decompose", "is_indecomposable", "iso_test", "g_vector",
    "pres_to_decorated", "decorated_to_pres", "canonical_key",
]


# products with a single basis element, vectorized over a row or column

def _unit_times_row(alg, b, row):
    """``b * row[k]`` for every entry of a row of an A-matrix."""
    return alg.field.reduce(alg.field.matmul(row, alg.mult[b])) if row.size else row


def _col_times_unit(alg, col, b):
    """``col[k] * b`` for every entry of a column of an A-matrix."""
    return alg.field.reduce(alg.field.matmul(col, alg.mult[:, b, :])) if col.size else col


@dataclass(frozen=True, eq=False)
class EResult:
    dimension: int
    basis: list  # A-matrices in Hom(P1 of f1, P0 of f2)


def e_space(f1: Presentation, f2: Presentation) -> EResult:
    f1.check_same_algebra(f2)
    alg = f1.algebra
    F = alg.field
    rows, cols = f2.p0, f1.p1
    idx = amat.coord_index(alg, rows, cols)
    if not idx:
        return EResult(0, [])
    pos = {t: k for k, t in enumerate(idx)}
    gens = []
    # g * f1 for g a unit of Hom(P0 of f1, P0 of f2)
    for i, j, b in amat.coord_index(alg, f2.p0, f1.p0):
        prod = _unit_times_row(alg, b, f1.matrix[j])
        v = F.zeros(len(idx))
        for jj, bb in zip(*np.nonzero(prod != 0)):
            v[pos[(i, jj, bb)]] = prod[jj, bb]
        gens.append(v)
    # f2 * h for h a unit of Hom(P1 of f1, P1 of f2)
    for i, j, b in amat.coord_index(alg, f2.p1, f1.p1):
        prod = _col_times_unit(alg, f2.matrix[:, i], b)
        v = F.zeros(len(idx))
        for ii, bb in zip(*np.nonzero(prod != 0)):
            v[pos[(ii, j, bb)]] = prod[ii, bb]
        gens.append(v)
    if gens:
        R, piv = rref(F, np.array(gens, dtype=F.dtype))
    else:
        piv = []
    free = [k for k in range(len(idx)) if k not in set(piv)]
    basis = []
    for k in free:
        X = amat.zeros(alg, rows, cols)
        i, j, b = idx[k]
        X[i, j, b] = F.one
        basis.append(X)
    return EResult(len(free), basis)


def e_dim(f1: Presentation, f2: Presentation) -> int:
    return e_space(f1, f2).dimension


def is_rigid(f: Presentation) -> bool:
    return e_dim(f, f) == 0


# Gaussian elimination on complexes

def _find_unit(alg, terms, diffs):
    for k, D in enumerate(diffs):
        src, tgt = terms[k], terms[k + 1]
        for i, v in enumerate(tgt):
            e = alg.idempotents[v]
            for j, w in enumerate(src):
                if v == w and D[i, j, e] != 0:
                    return k, i, j
    return None


def _local_inverse(alg: PathBasisAlgebra, x: np.ndarray, v: int) -> np.ndarray:
    return amat.inverse(alg, x.reshape(1, 1, -1), [v], [v])[0, 0]


def reduce_complex(alg: PathBasisAlgebra, terms, diffs):
    """Cancel contractible summands ``P --iso--> P`` until every entry is radical.

    ``terms[k]`` lists the vertices of the k-th term, ``diffs[k]`` is the
    A-matrix ``terms[k] -> terms[k+1]``.  The result is homotopy equivalent.
    """
    F = alg.field
    terms = [list(t) for t in terms]
    diffs = [np.array(D, copy=True) for D in diffs]
    while True:
        hit = _find_unit(alg, terms, diffs)
        if hit is None:
            return terms, diffs
        k, i, j = hit
        D = diffs[k]
        v = terms[k][j]
        phi_inv = _local_inverse(alg, D[i, j], v)
        keep_r = [r for r in range(D.shape[0]) if r != i]
        keep_c = [c for c in range(D.shape[1]) if c != j]
        gamma = D[keep_r][:, [j]]                       # b1 -> E
        delta = D[[i]][:, keep_c]                       # D -> b2
        corr = amat.matmul(alg, amat.matmul(alg, gamma, phi_inv.reshape(1, 1, -1)), delta)
        diffs[k] = F.reduce(D[keep_r][:, keep_c] - corr)
        if k > 0:
            diffs[k - 1] = diffs[k - 1][[r for r in range(diffs[k - 1].shape[0]) if r != j]]
        if k + 1 < len(diffs):
            diffs[k + 1] = diffs[k + 1][:, [c for c in range(diffs[k + 1].shape[1]) if c != i]]
        del terms[k][j]
        del terms[k + 1][i]


def minimize(f: Presentation) -> Presentation:
    """Homotopy-equivalent presentation whose matrix has only radical entries."""
    terms, diffs = reduce_complex(f.algebra, [f.p1, f.p0], [f.matrix])
    return Presentation(f.algebra, terms[0], terms[1], diffs[0])


def is_minimal(f: Presentation) -> bool:
    return _find_unit(f.algebra, [f.p1, f.p0], [f.matrix]) is None


# chain maps

@dataclass(frozen=True, eq=False)
class ChainMap:
    source: Presentation
    target: Presentation
    h1: np.ndarray  # P1 -> P1'
    h0: np.ndarray  # P0 -> P0'

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self ∘ other``."""
        alg = self.source.algebra
        return ChainMap(other.source, self.target, amat.matmul(alg, self.h1, other.h1),
                        amat.matmul(alg, self.h0, other.h0))

    def combine(self, other: "ChainMap", a=1, b=1) -> "ChainMap":
        F = self.source.algebra.field
        return ChainMap(self.source, self.target, F.reduce(a * self.h1 + b * other.h1),
                        F.reduce(a * self.h0 + b * other.h0))

    def is_chain_map(self) -> bool:
        alg = self.source.algebra
        lhs = amat.matmul(alg, self.h0, self.source.matrix)
        rhs = amat.matmul(alg, self.target.matrix, self.h1)
        return amat.is_zero(alg.field.reduce(lhs - rhs))

    def top(self) -> tuple[np.ndarray, np.ndarray]:
        alg = self.source.algebra
        return (amat.top(alg, self.h1, self.target.p1, self.source.p1),
                amat.top(alg, self.h0, self.target.p0, self.source.p0))

    def is_iso(self) -> bool:
        F = self.source.algebra.field
        return all(t.shape[0] == t.shape[1] and rank(F, t) == t.shape[0] for t in self.top())

    def vector(self) -> np.ndarray:
        return _chain_vector(self.source, self.target, self.h1, self.h0)


def _indices(X: Presentation, Y: Presentation):
    alg = X.algebra
    return amat.coord_index(alg, Y.p1, X.p1), amat.coord_index(alg, Y.p0, X.p0)


def _chain_vector(X, Y, h1, h0):
    i1, i0 = _indices(X, Y)
    return np.concatenate([amat.to_coords(h1, i1), amat.to_coords(h0, i0)])


def _chain_from_vector(X, Y, vec):
    alg = X.algebra
    i1, i0 = _indices(X, Y)
    h1 = amat.from_coords(alg, vec[:len(i1)], i1, Y.p1, X.p1)
    h0 = amat.from_coords(alg, vec[len(i1):], i0, Y.p0, X.p0)
    return ChainMap(X, Y, h1, h0)


def chain_maps(X: Presentation, Y: Presentation) -> list[ChainMap]:
    """Basis of chain maps ``X -> Y`` (pairs with ``h0 f_X = f_Y h1``)."""
    X.check_same_algebra(Y)
    alg = X.algebra
    F = alg.field
    i1, i0 = _indices(X, Y)
    ieq = amat.coord_index(alg, Y.p0, X.p1)
    pos = {t: k for k, t in enumerate(ieq)}
    cols = []
    for i, j, b in i1:  # -(f_Y h1)
        prod = _col_times_unit(alg, Y.matrix[:, i], b)
        v = F.zeros(len(ieq))
        for ii, bb in zip(*np.nonzero(prod != 0)):
            v[pos[(ii, j, bb)]] = F.reduce(-prod[ii, bb])
        cols.append(v)
    for i, j, b in i0:  # h0 f_X
        prod = _unit_times_row(alg, b, X.matrix[j])
        v = F.zeros(len(ieq))
        for jj, bb in zip(*np.nonzero(prod != 0)):
            v[pos[(i, jj, bb)]] = prod[jj, bb]
        cols.append(v)
    nvar = len(i1) + len(i0)
    if nvar == 0:
        return []
    system = np.array(cols, dtype=F.dtype).T if ieq else F.zeros((0, nvar))
    N = nullspace(F, system)
    return [_chain_from_vector(X, Y, N[:, k]) for k in range(N.shape[1])]


def null_homotopic(X: Presentation, Y: Presentation) -> list[ChainMap]:
    """Spanning set ``(s f_X, f_Y s)`` for ``s`` a unit of Hom(P0 of X, P1 of Y)."""
    alg = X.algebra
    out = []
    for i, j, b in amat.coord_index(alg, Y.p1, X.p0):
        h1 = amat.zeros(alg, Y.p1, X.p1)
        h1[i] = _unit_times_row(alg, b, X.matrix[j])
        h0 = amat.zeros(alg, Y.p0, X.p0)
        h0[:, j] = _col_times_unit(alg, Y.matrix[:, i], b)
        out.append(ChainMap(X, Y, h1, h0))
    return out


def hom_k(X: Presentation, Y: Presentation, extra=()) -> list[ChainMap]:
    """Representatives of a basis of Hom_K(X, Y) modulo homotopy and ``extra`` maps."""
    F = X.algebra.field
    width = sum(len(t) for t in _indices(X, Y))
    span = RowSpace(F, width)
    for h in list(null_homotopic(X, Y)) + list(extra):
        span.add(h.vector())
    return [c for c in chain_maps(X, Y) if span.add(c.vector())]


def identity_map(f: Presentation) -> ChainMap:
    alg = f.algebra
    return ChainMap(f, f, amat.identity(alg, f.p1), amat.identity(alg, f.p0))


@dataclass(frozen=True, eq=False)
class EndAlgebra:
    """End_K(f): chain endomorphisms modulo null-homotopic ones."""
    presentation: Presentation
    basis: list  # ChainMap representatives
    table: np.ndarray  # table[i, j] = coordinates of basis[i] ∘ basis[j]

    @property
    def dim(self) -> int:
        return len(self.basis)


def end_algebra(f: Presentation) -> EndAlgebra:
    F = f.algebra.field
    null = [h.vector() for h in null_homotopic(f, f)]
    reps = hom_k(f, f)
    k = len(reps)
    table = F.zeros((k, k, k))
    if k:
        cols = np.array(null + [r.vector() for r in reps], dtype=F.dtype).T
        for i, a in enumerate(reps):
            for j, b in enumerate(reps):
                sol = solve(F, cols, a.compose(b).vector())
                table[i, j] = sol[len(null):]
    return EndAlgebra(f, reps, table)


# decomposition

def g_vector(f: Presentation) -> tuple[int, ...]:
    n = f.algebra.n
    g = [0] * n
    for v in f.p0:
        g[v] += 1
    for v in f.p1:
        g[v] -= 1
    return tuple(g)


def _seed_for(f: Presentation, seed: int) -> int:
    return zlib.crc32(repr((seed, f.key())).encode())


def field_roots(F: Field, coeffs) -> list:
    """Roots in F of the polynomial with coefficients ``coeffs`` (lowest degree first)."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    if F.is_prime:
        xs = np.arange(F.p, dtype=np.int64)
        acc = np.zeros(F.p, dtype=np.int64)
        for c in reversed(coeffs):
            acc = (acc * xs + int(c)) % F.p
        return [int(x) for x in np.nonzero(acc == 0)[0]]
    import sympy
    from fractions import Fraction
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], t,
                      domain="QQ")
    return sorted(Fraction(int(r.p), int(r.q)) for r in poly.ground_roots())


def _min_poly(F: Field, T: np.ndarray) -> list:
    """Minimal polynomial of a square k-matrix, lowest coefficient first, monic."""
    s = T.shape[0]
    powers = [F.eye(s).reshape(-1)]
    cur = F.eye(s)
    while True:
        cur = F.matmul(cur, T)
        A = np.array(powers, dtype=F.dtype).T
        sol = solve(F, A, cur.reshape(-1))
        if sol is not None:
            return [F.reduce(-c) for c in sol] + [F.one]
        powers.append(cur.reshape(-1))


def _spectral_projector(F: Field, T: np.ndarray, lam) -> np.ndarray:
    s = T.shape[0]
    S = F.reduce(T - lam * F.eye(s))
    Sp = F.eye(s)
    for _ in range(s):
        Sp = F.matmul(Sp, S)
    K = nullspace(F, Sp)
    if Sp.size and rank(F, Sp):
        R, piv = rref(F, Sp)
        Im = Sp[:, piv]
    else:
        Im = F.zeros((s, 0))
    B = np.concatenate([K, Im], axis=1)
    D = F.zeros((s, s))
    for k in range(K.shape[1]):
        D[k, k] = F.one
    return F.matmul(F.matmul(B, D), kinverse(F, B))


def _block_top(c: ChainMap) -> np.ndarray:
    F = c.source.algebra.field
    t1, t0 = c.top()
    s1, s0 = t1.shape[0], t0.shape[0]
    out = F.zeros((s1 + s0, s1 + s0))
    out[:s1, :s1] = t1
    out[s1:, s1:] = t0
    return out


def _make_idempotent(e: ChainMap, limit: int = 64) -> ChainMap:
    """Lift an idempotent modulo the radical: iterate ``e <- 3e^2 - 2e^3``."""
    for _ in range(limit):
        e2 = e.compose(e)
        if amat.is_zero(e2.h1 - e.h1) and amat.is_zero(e2.h0 - e.h0):
            return e
        e3 = e2.compose(e)
        e = e2.combine(e3, 3, -2)
    raise IdempotentSearchExhausted("idempotent lifting did not converge")


def _find_idempotent(f: Presentation, C: list[ChainMap], tops: list[np.ndarray], seed: int,
                     trials: int = 24):
    F = f.algebra.field
    k = len(C)
    s = tops[0].shape[0]
    flat = np.array([t.reshape(-1) for t in tops], dtype=F.dtype).T
    rng = np.random.default_rng(_seed_for(f, seed))
    candidates = []
    for _ in range(trials):
        candidates.append(F.random_array(rng, k))
    if k <= 6:  # exhaustive basis search fallback
        for a in range(k):
            candidates.append(np.array([F.one if i == a else F.zero for i in range(k)], dtype=F.dtype))
            for b in range(a + 1, k):
                candidates.append(np.array([F.one if i in (a, b) else F.zero for i in range(k)],
                                           dtype=F.dtype))
    for coeffs in candidates:
        T = F.reduce(F.matmul(flat, coeffs.reshape(-1, 1))).reshape(s, s)
        for lam in field_roots(F, _min_poly(F, T)):
            E = _spectral_projector(F, T, lam)
            if not np.any(E != 0) or not np.any(F.reduce(E - F.eye(s)) != 0):
                continue
            b = solve(F, flat, E.reshape(-1))
            e = None
            for bk, c in zip(b, C):
                if bk != 0:
                    term = ChainMap(f, f, F.reduce(bk * c.h1), F.reduce(bk * c.h0))
                    e = term if e is None else e.combine(term)
            return _make_idempotent(e)
    return None


def _image_of_idempotent(alg, E: np.ndarray, verts):
    """Maps ``ι, π`` with ``π ι = 1`` and ``ι π = E`` for an idempotent A-matrix."""
    F = alg.field
    T = amat.top(alg, E, verts, verts)
    if not verts or not np.any(T != 0):
        return [], amat.zeros(alg, verts, []), amat.zeros(alg, [], verts)
    _, cols = rref(F, T)
    _, rows = rref(F, T.T)
    sub = [verts[c] for c in cols]
    iota = E[:, cols]
    inv = amat.inverse(alg, E[rows][:, cols], [verts[r] for r in rows], sub)
    pi = amat.matmul(alg, inv, E[rows])
    return sub, iota, pi


def _split(f: Presentation, e: ChainMap) -> tuple[Presentation, Presentation]:
    alg = f.algebra
    F = alg.field
    pieces = []
    for idem in (e, identity_map(f).combine(e, 1, -1)):
        q1, i1, _ = _image_of_idempotent(alg, idem.h1, f.p1)
        q0, _, p0 = _image_of_idempotent(alg, idem.h0, f.p0)
        M = amat.matmul(alg, amat.matmul(alg, p0, f.matrix), i1) if q0 and q1 \
            else amat.zeros(alg, q0, q1)
        pieces.append(Presentation(alg, q1, q0, M))
    return pieces[0], pieces[1]


def _semisimple_rank(F: Field, tops: list[np.ndarray]) -> int:
    k = len(tops)
    G = F.zeros((k, k))
    for i in range(k):
        for j in range(k):
            G[i, j] = F.reduce(np.trace(F.matmul(tops[i], tops[j])))
    return rank(F, G)


def _decompose_minimal(f: Presentation, seed: int) -> list[Presentation]:
    if len(f.p0) + len(f.p1) <= 1:
        return [f]
    C = chain_maps(f, f)
    tops = [_block_top(c) for c in C]
    # trace form of the top algebra: its rank is dim End/rad End
    if _semisimple_rank(f.algebra.field, tops) <= 1:
        return [f]
    e = _find_idempotent(f, C, tops, seed)
    if e is None:
        raise IdempotentSearchExhausted(f"no idempotent found for {f!r}")
    a, b = _split(f, e)
    return _decompose_minimal(a, seed) + _decompose_minimal(b, seed)


def canonical_key(f: Presentation) -> tuple:
    return (g_vector(f), amat.degree_profile(f.algebra, f.matrix), f.key())


def decompose(f: Presentation, seed: int = 0) -> list[Presentation]:
    """Indecomposable summands of f (minimized), sorted by g-vector."""
    m = minimize(f)
    if m.is_zero:
        return []
    return sorted(_decompose_minimal(m, seed), key=canonical_key)


def is_indecomposable(f: Presentation) -> bool:
    return len(decompose(f)) == 1


def iso_indecomposable(X: Presentation, Y: Presentation) -> bool:
    """Isomorphism of two minimal indecomposable presentations."""
    if sorted(X.p0) != sorted(Y.p0) or sorted(X.p1) != sorted(Y.p1):
        return False
    there = chain_maps(X, Y)
    if not there:
        return False
    back = chain_maps(Y, X)
    # End(X) is local, so some composite is a unit iff X and Y are isomorphic
    return any(b.compose(a).is_iso() for a in there for b in back)


def match_summands(xs, ys) -> bool:
    ys = list(ys)
    if len(xs) != len(ys):
        return False
    for x in xs:
        for k, y in enumerate(ys):
            if iso_indecomposable(x, y):
                del ys[k]
                break
        else:
            return False
    return True


def iso_test(f1: Presentation, f2: Presentation) -> bool:
    f1.check_same_algebra(f2)
    if g_vector(f1) != g_vector(f2):
        return False
    return match_summands(decompose(f1), decompose(f2))


def index_in(f: Presentation, pool) -> int:
    """Position of an indecomposable f in a list of indecomposables, or -1."""
    for k, g in enumerate(pool):
        if g_vector(g) == g_vector(f) and iso_indecomposable(g, f):
            return k
    return -1


# decorated representations

def pres_to_decorated(f: Presentation) -> DecoratedRep:
    alg = f.algebra
    deco = [0] * alg.n
    rest = []
    for s in decompose(f):
        if s.is_shifted_projective:
            for v in s.p1:
                deco[v] += 1
        else:
            rest.append(s)
    module = coker(direct_sum(*rest)) if rest else Representation.zero(alg)
    return DecoratedRep(module, tuple(deco))


def decorated_to_pres(d: DecoratedRep) -> Presentation:
    alg = d.module.algebra
    parts = [min_presentation(d.module)]
    parts += [Presentation.shifted(alg, v) for v in range(alg.n) for _ in range(d.decoration[v])]
    return direct_sum(*parts)
