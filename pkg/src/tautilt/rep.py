"""Quiver representations of A (right modules), Hom spaces, presentations and τ.

A representation assigns ``M(v) = M e_v`` to each vertex and to an arrow
``a: i -> j`` the matrix of ``m -> m a``, of shape ``dims[j] x dims[i]``.
A path ``a1 a2 ... ak`` therefore acts by ``M_ak ... M_a2 M_a1``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import amat
from .algebra import PathBasisAlgebra
from .errors import AlgebraMismatch
from .field import Field
from .linalg import RowSpace, inverse, nullspace, quotient_map, rank, rref, solve
from .twoterm import Presentation


class Representation:
    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra: PathBasisAlgebra, dims, maps=None, check: bool = True):
        F = algebra.field
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n or min(self.dims, default=0) < 0:
            raise ValueError("dims must be a nonnegative vector over the vertices")
        maps = dict(maps or {})
        full = {}
        for a, s, t in algebra.quiver.arrows:
            m = maps.get(a)
            shape = (self.dims[t], self.dims[s])
            if m is None:
                m = F.zeros(shape)
            m = np.asarray(m, dtype=F.dtype)
            if m.shape != shape:
                raise ValueError(f"arrow {a}: expected shape {shape}, got {m.shape}")
            full[a] = m
        self.maps = full
        if check:
            self.check_relations()

    @classmethod
    def zero(cls, algebra) -> "Representation":
        return cls(algebra, [0] * algebra.n, check=False)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self):
        return f"Representation(dims={list(self.dims)})"

    def act(self, word, v: int | None = None) -> np.ndarray:
        """Matrix of the right action of an arrow word (identity at ``v`` if empty)."""
        F = self.field
        q = self.algebra.quiver
        if not word:
            return F.eye(self.dims[v])
        if not q.is_path(word):
            raise ValueError(f"{word} is not a path")
        out = self.maps[word[0]]
        for a in word[1:]:
            out = F.matmul(self.maps[a], out)
        return out

    def act_basis(self, b: int) -> np.ndarray:
        path = self.algebra.basis[b]
        return self.act(path.arrows, path.source)

    def act_element(self, x: np.ndarray, v: int, w: int) -> np.ndarray:
        """Action of an element of e_v A e_w as a map M(v) -> M(w)."""
        F = self.field
        out = F.zeros((self.dims[w], self.dims[v]))
        for b in self.algebra.corner[v][w]:
            if x[b] != 0:
                out = F.reduce(out + x[b] * self.act_basis(b))
        return out

    def check_relations(self):
        alg = self.algebra
        F = self.field
        q = alg.quiver
        for r in alg.spec.relations:
            if not r.terms:
                continue
            s = q.source[r.terms[0][1][0]]
            t = q.target[r.terms[0][1][-1]]
            total = F.zeros((self.dims[t], self.dims[s]))
            for c, word in r.terms:
                total = F.reduce(total + F(c) * self.act(tuple(word)))
            if np.any(total != 0):
                raise ValueError(f"relation {r.terms} does not vanish on the representation")
        # paths of length N act by zero
        N = alg.spec.nilpotency_bound
        frontier = {(a,): self.maps[a] for a, _, _ in q.arrows}
        for _ in range(N - 1):
            nxt = {}
            for w, m in frontier.items():
                if not np.any(m != 0):
                    continue
                for a, s, _ in q.arrows:
                    if s == q.target[w[-1]]:
                        nxt[w + (a,)] = F.matmul(self.maps[a], m)
            frontier = nxt
        for w, m in frontier.items():
            if np.any(m != 0):
                raise ValueError(f"path {w} of length >= N acts nontrivially")

    def to_vertex_blocks(self):
        return [sum(self.dims[:v]) for v in range(self.algebra.n + 1)]


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    mats: tuple  # per vertex, target.dims[v] x source.dims[v]

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self ∘ other``."""
        F = self.source.field
        return ModuleMap(other.source, self.target,
                         tuple(F.matmul(a, b) for a, b in zip(self.mats, other.mats)))

    def is_morphism(self) -> bool:
        F = self.source.field
        for a, s, t in self.source.algebra.quiver.arrows:
            lhs = F.matmul(self.mats[t], self.source.maps[a])
            rhs = F.matmul(self.target.maps[a], self.mats[s])
            if np.any(F.reduce(lhs - rhs) != 0):
                return False
        return True


@dataclass(frozen=True, eq=False)
class DecoratedRep:
    module: Representation
    decoration: tuple[int, ...]

    def __post_init__(self):
        if len(self.decoration) != self.module.algebra.n or min(self.decoration) < 0:
            raise ValueError("decoration must be a nonnegative vector over the vertices")


def _same(M: Representation, N: Representation):
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("representations over different algebras")


def direct_sum(*Ms: Representation) -> Representation:
    alg = Ms[0].algebra
    F = alg.field
    for M in Ms[1:]:
        _same(Ms[0], M)
    dims = [sum(M.dims[v] for M in Ms) for v in range(alg.n)]
    maps = {}
    for a, s, t in alg.quiver.arrows:
        m = F.zeros((dims[t], dims[s]))
        r = c = 0
        for M in Ms:
            m[r:r + M.dims[t], c:c + M.dims[s]] = M.maps[a]
            r += M.dims[t]
            c += M.dims[s]
        maps[a] = m
    return Representation(alg, dims, maps, check=False)


def _kron(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.multiply.outer(A, B).transpose(0, 2, 1, 3)
    return F.reduce(out.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1]))


def hom_space(M: Representation, N: Representation) -> list[ModuleMap]:
    """Basis of Hom_A(M, N) by solving the commutation equations."""
    _same(M, N)
    F = M.field
    alg = M.algebra
    offs = [0]
    for v in range(alg.n):
        offs.append(offs[-1] + N.dims[v] * M.dims[v])
    nvar = offs[-1]
    blocks = []
    for a, s, t in alg.quiver.arrows:
        # phi_t M_a - N_a phi_s = 0, row-major vec(A X B) = (A kron B^T) vec(X)
        rows = N.dims[t] * M.dims[s]
        if rows == 0:
            continue
        eq = F.zeros((rows, nvar))
        eq[:, offs[t]:offs[t + 1]] = _kron(F, F.eye(N.dims[t]), M.maps[a].T)
        eq[:, offs[s]:offs[s + 1]] = F.reduce(eq[:, offs[s]:offs[s + 1]]
                                              - _kron(F, N.maps[a], F.eye(M.dims[s])))
        blocks.append(eq)
    system = np.concatenate(blocks) if blocks else F.zeros((0, nvar))
    sol = nullspace(F, system)
    out = []
    for k in range(sol.shape[1]):
        mats = tuple(sol[offs[v]:offs[v + 1], k].reshape(N.dims[v], M.dims[v]) for v in range(alg.n))
        out.append(ModuleMap(M, N, mats))
    return out


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


def subrepresentation(M: Representation, bases) -> tuple[Representation, ModuleMap]:
    """Submodule spanned vertexwise by the columns of ``bases[v]`` (assumed closed)."""
    F = M.field
    alg = M.algebra
    dims = [b.shape[1] for b in bases]
    maps = {}
    for a, s, t in alg.quiver.arrows:
        X = solve(F, bases[t], F.matmul(M.maps[a], bases[s])) if dims[t] else F.zeros((0, dims[s]))
        if X is None:
            raise ValueError("subspace is not a submodule")
        maps[a] = X
    sub = Representation(alg, dims, maps, check=False)
    return sub, ModuleMap(sub, M, tuple(bases))


def quotient(M: Representation, bases) -> tuple[Representation, ModuleMap]:
    """Quotient of M by the submodule spanned vertexwise by ``bases[v]``.

    The quotient at v is identified with the standard coordinates not hit by a
    pivot of the submodule, which makes the choice deterministic.
    """
    F = M.field
    alg = M.algebra
    qs, comps = [], []
    for v in range(alg.n):
        Q, comp = quotient_map(F, bases[v], M.dims[v])
        qs.append(Q)
        comps.append(comp)
    dims = [len(c) for c in comps]
    maps = {a: F.matmul(qs[t], M.maps[a][:, comps[s]]) for a, s, t in alg.quiver.arrows}
    Qrep = Representation(alg, dims, maps, check=False)
    return Qrep, ModuleMap(M, Qrep, tuple(qs))


def kernel(phi: ModuleMap) -> tuple[Representation, ModuleMap]:
    F = phi.source.field
    return subrepresentation(phi.source, [nullspace(F, m) if m.shape[1] else F.zeros((0, 0))
                                          for m in phi.mats])


def cokernel(phi: ModuleMap) -> tuple[Representation, ModuleMap]:
    return quotient(phi.target, list(phi.mats))


def projective_as_rep(alg: PathBasisAlgebra, v: int) -> Representation:
    """``P_v = e_v A`` with ``P_v(u)`` spanned by the basis paths ``v -> u``."""
    return projective_sum(alg, [v])


def injective_as_rep(alg: PathBasisAlgebra, v: int) -> Representation:
    """``I_v = D(A e_v)`` with ``I_v(u)`` dual to the basis paths ``u -> v``."""
    return injective_sum(alg, [v])


def projective_sum(alg: PathBasisAlgebra, verts) -> Representation:
    F = alg.field
    dims = [sum(len(alg.corner[v][u]) for v in verts) for u in range(alg.n)]
    maps = {}
    for a, s, t in alg.quiver.arrows:
        m = F.zeros((dims[t], dims[s]))
        x = alg.arrow(a)
        r = c = 0
        for v in verts:
            src, tgt = alg.corner[v][s], alg.corner[v][t]
            for k, b in enumerate(src):
                y = alg.mul(alg.unit(b), x)
                m[r:r + len(tgt), c + k] = y[tgt]
            r += len(tgt)
            c += len(src)
        maps[a] = m
    return Representation(alg, dims, maps, check=False)


def injective_sum(alg: PathBasisAlgebra, verts) -> Representation:
    F = alg.field
    dims = [sum(len(alg.corner[u][v]) for v in verts) for u in range(alg.n)]
    maps = {}
    for a, s, t in alg.quiver.arrows:
        m = F.zeros((dims[t], dims[s]))
        x = alg.arrow(a)
        r = c = 0
        for v in verts:
            # left multiplication by a: e_t A e_v -> e_s A e_v, then dualize
            src, tgt = alg.corner[t][v], alg.corner[s][v]
            L = F.zeros((len(tgt), len(src)))
            for k, b in enumerate(src):
                L[:, k] = alg.mul(x, alg.unit(b))[tgt]
            m[r:r + len(src), c:c + len(tgt)] = L.T
            r += len(src)
            c += len(tgt)
        maps[a] = m
    return Representation(alg, dims, maps, check=False)


def projective_map(alg: PathBasisAlgebra, X: np.ndarray, rows, cols) -> ModuleMap:
    """The module map ``⊕P_cols -> ⊕P_rows`` given by an A-matrix (left multiplication)."""
    F = alg.field
    src, tgt = projective_sum(alg, cols), projective_sum(alg, rows)
    mats = []
    for u in range(alg.n):
        m = F.zeros((tgt.dims[u], src.dims[u]))
        roff = np.cumsum([0] + [len(alg.corner[v][u]) for v in rows])
        coff = np.cumsum([0] + [len(alg.corner[w][u]) for w in cols])
        for j, w in enumerate(cols):
            for k, b in enumerate(alg.corner[w][u]):
                ub = alg.unit(b)
                for i, v in enumerate(rows):
                    if np.any(X[i, j] != 0):
                        m[roff[i]:roff[i + 1], coff[j] + k] = alg.mul(X[i, j], ub)[alg.corner[v][u]]
        mats.append(m)
    return ModuleMap(src, tgt, tuple(mats))


def nakayama_map(alg: PathBasisAlgebra, X: np.ndarray, rows, cols) -> ModuleMap:
    """ν of the map ``⊕P_cols -> ⊕P_rows``: ``⊕I_cols -> ⊕I_rows``.

    ν(left multiplication by x) is the dual of right multiplication by x.
    """
    F = alg.field
    src, tgt = injective_sum(alg, cols), injective_sum(alg, rows)
    mats = []
    for u in range(alg.n):
        m = F.zeros((tgt.dims[u], src.dims[u]))
        roff = np.cumsum([0] + [len(alg.corner[u][v]) for v in rows])
        coff = np.cumsum([0] + [len(alg.corner[u][w]) for w in cols])
        for i, v in enumerate(rows):
            for j, w in enumerate(cols):
                if not np.any(X[i, j] != 0):
                    continue
                R = F.zeros((len(alg.corner[u][w]), len(alg.corner[u][v])))
                for k, b in enumerate(alg.corner[u][v]):
                    R[:, k] = alg.mul(alg.unit(b), X[i, j])[alg.corner[u][w]]
                m[roff[i]:roff[i + 1], coff[j]:coff[j + 1]] = R.T
        mats.append(m)
    return ModuleMap(src, tgt, tuple(mats))


def top_and_radical(M: Representation) -> tuple[Representation, Representation]:
    """``(M / rad M, rad M)``; ``rad M`` is the sum of the images of the arrows."""
    top, _, rad, _ = _top_radical(M)
    return top, rad


def _radical_bases(M: Representation):
    F = M.field
    alg = M.algebra
    out = []
    for u in range(alg.n):
        ims = [M.maps[a] for a, _, t in alg.quiver.arrows if t == u and M.maps[a].size]
        if ims:
            R, piv = rref(F, np.concatenate(ims, axis=1).T)
            out.append(R.T.copy())
        else:
            out.append(F.zeros((M.dims[u], 0)))
    return out


def _top_radical(M: Representation):
    bases = _radical_bases(M)
    rad, incl = subrepresentation(M, bases)
    top, proj = quotient(M, bases)
    return top, proj, rad, incl


def projective_cover(M: Representation) -> tuple[list[int], ModuleMap]:
    """``(P0 vertices, surjection ⊕P_v -> M)``; generators lift a basis of the top."""
    F = M.field
    alg = M.algebra
    rad = _radical_bases(M)
    verts, gens = [], []
    for u in range(alg.n):
        _, comp = quotient_map(F, rad[u], M.dims[u])
        for c in comp:
            g = F.zeros(M.dims[u])
            g[c] = F.one
            verts.append(u)
            gens.append(g)
    P = projective_sum(alg, verts)
    mats = []
    for x in range(alg.n):
        cols = []
        for u, g in zip(verts, gens):
            for b in alg.corner[u][x]:
                cols.append(F.matmul(M.act_basis(b), g.reshape(-1, 1)))
        mats.append(np.concatenate(cols, axis=1) if cols else F.zeros((M.dims[x], 0)))
    return verts, ModuleMap(P, M, tuple(mats))


def _generators_to_matrix(alg, p0, gens_by_vertex) -> np.ndarray:
    """Turn elements of P0(w) (one per P1 summand) into an A-matrix column block."""
    p1 = [w for w, _ in gens_by_vertex]
    X = amat.zeros(alg, p0, p1)
    for j, (w, vec) in enumerate(gens_by_vertex):
        off = 0
        for i, v in enumerate(p0):
            idx = alg.corner[v][w]
            X[i, j, idx] = vec[off:off + len(idx)]
            off += len(idx)
    return X


def min_presentation(M: Representation) -> Presentation:
    """Minimal projective presentation ``P1 -> P0 -> M -> 0``."""
    alg = M.algebra
    if M.is_zero:
        return Presentation.zero(alg)
    p0, pi = projective_cover(M)
    K, incl = kernel(pi)
    if K.is_zero:
        return Presentation(alg, (), p0)
    p1, sigma = projective_cover(K)
    F = alg.field
    gens = []
    # generator j of P1 sits at e_w; its image in P0(w) is incl_w(sigma_w(e_w))
    for j, w in enumerate(p1):
        k_idx = sum(len(alg.corner[v][w]) for v in p1[:j])  # e_w leads corner[w][w]
        k_vec = sigma.mats[w][:, k_idx]
        gens.append((w, F.matmul(incl.mats[w], k_vec.reshape(-1, 1)).reshape(-1)))
    return Presentation(alg, p1, p0, _generators_to_matrix(alg, p0, gens))


def coker(f: Presentation) -> Representation:
    """Cokernel of the presentation, computed vertexwise."""
    alg = f.algebra
    phi = projective_map(alg, f.matrix, f.p0, f.p1)
    return cokernel(phi)[0]


def tau(M: Representation) -> Representation:
    """Auslander-Reiten translate: kernel of ν applied to the minimal presentation."""
    alg = M.algebra
    if M.is_zero:
        return Representation.zero(alg)
    f = min_presentation(M)
    return kernel(nakayama_map(alg, f.matrix, f.p0, f.p1))[0]


def simple(alg: PathBasisAlgebra, v: int) -> Representation:
    dims = [0] * alg.n
    dims[v] = 1
    return Representation(alg, dims, check=False)


def regular(alg: PathBasisAlgebra) -> Representation:
    return projective_sum(alg, range(alg.n))


def tau_rigid_pair_check(M: Representation, P) -> bool:
    """``Hom(M, τM) = 0`` and ``Hom(P, M) = 0`` for ``P = ⊕ P_v^{P[v]}``."""
    alg = M.algebra
    if any(P):
        Pm = projective_sum(alg, [v for v in range(alg.n) for _ in range(P[v])])
        if hom_space(Pm, M):
            return False
    if M.is_zero:
        return True
    return not hom_space(M, tau(M))


def is_tau_rigid(M: Representation) -> bool:
    return tau_rigid_pair_check(M, [0] * M.algebra.n)


def fac_membership(X: Representation, M: Representation) -> bool:
    """Whether X is a quotient of a direct sum of copies of M."""
    _same(X, M)
    F = X.field
    maps = hom_space(M, X)
    for v in range(X.algebra.n):
        if X.dims[v] == 0:
            continue
        if not maps:
            return False
        if rank(F, np.concatenate([m.mats[v] for m in maps], axis=1)) < X.dims[v]:
            return False
    return True


def is_isomorphic(M: Representation, N: Representation, seed: int = 0, tries: int = 8) -> bool:
    """Dimension test plus an explicit invertible map found among random combinations."""
    _same(M, N)
    if M.dims != N.dims:
        return False
    if M.is_zero:
        return True
    F = M.field
    H = hom_space(M, N)
    if len(H) != len(hom_space(N, M)) or len(H) != len(hom_space(M, M)):
        return False
    rng = np.random.default_rng(seed)
    for attempt in range(tries + len(H)):
        if attempt < len(H):
            coeffs = [F.one if k == attempt else F.zero for k in range(len(H))]
        else:
            coeffs = list(F.random_array(rng, len(H)))
        ok = True
        for v in range(M.algebra.n):
            m = F.zeros((N.dims[v], M.dims[v]))
            for c, h in zip(coeffs, H):
                m = F.reduce(m + c * h.mats[v])
            if M.dims[v] and rank(F, m) < M.dims[v]:
                ok = False
                break
        if ok:
            return True
    return False


def random_representation(alg: PathBasisAlgebra, dims, rng: np.random.Generator) -> Representation:
    """A random module with the given dims over an algebra with monomial quadratic relations.

    Arrow maps are drawn with random rank.  Relations ``ab = 0`` are enforced by
    sampling ``M_b`` to kill the images of all ``M_a``; a loop ``x`` with
    ``x^2 = 0`` gets a random square-zero matrix.
    """
    F = alg.field
    q = alg.quiver
    killed = {}
    for r in alg.spec.relations:
        if len(r.terms) != 1 or len(r.terms[0][1]) != 2:
            raise NotImplementedError("random modules need monomial quadratic relations")
        a, b = r.terms[0][1]
        killed.setdefault(b, []).append(a)
    if alg.spec.nilpotency_bound < 2:
        return Representation(alg, dims, check=False)
    maps = {}
    pending = list(q.arrows)
    while pending:
        ready = [x for x in pending if all(p in maps or p == x[0] for p in killed.get(x[0], []))]
        if not ready:
            raise NotImplementedError("cyclic monomial relations")
        a, s, t = ready[0]
        pending.remove(ready[0])
        if s == t and a in killed.get(a, []):
            maps[a] = _square_zero(F, dims[s], rng)
            continue
        images = [maps[x] for x in killed.get(a, []) if x != a]
        Q, _ = quotient_map(F, np.concatenate(images, axis=1) if images else F.zeros((dims[s], 0)),
                            dims[s])
        c = Q.shape[0]
        r = int(rng.integers(0, min(dims[t], c) + 1)) if min(dims[t], c) else 0
        R = F.matmul(F.random_array(rng, (dims[t], r)), F.random_array(rng, (r, c)))
        maps[a] = F.matmul(R, Q)
    M = Representation(alg, dims, maps, check=False)
    M.check_relations()
    return M


def _square_zero(F: Field, d: int, rng) -> np.ndarray:
    if d == 0:
        return F.zeros((0, 0))
    k = int(rng.integers(0, d // 2 + 1))
    J = F.zeros((d, d))
    for i in range(k):
        J[2 * i + 1, 2 * i] = F.one
    # conjugate by a random invertible matrix
    while True:
        S = F.random_array(rng, (d, d))
        if rank(F, S) == d:
            break
    return F.matmul(F.matmul(S, J), inverse(F, S))
