"""Representations of quivers over prime fields.

Points of Rep(Q, alpha)(F_p) are encoded as integers: the matrix entries of
all arrows (arrow order, row-major) read as base-p digits, most significant
first, so numeric order is lexicographic order of the entry sequence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import modp
from .errors import BudgetExceeded, FieldMismatch, OrientedCycle, ShapeMismatch, ValidationError
from .quiver import Quiver, Vector

DEFAULT_REP_BUDGET = 2_000_000
DEFAULT_END_BUDGET = 1_000_000
_SCAN_CHUNK = 1 << 15


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not modp.is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")


class RepSpace:
    """Layout of Rep(Q, alpha) over F_p."""

    def __init__(self, q: Quiver, dim: Sequence[int], p: int):
        q.check(dim)
        if any(d < 0 for d in dim):
            raise ValidationError(f"negative dimension vector {tuple(dim)}")
        PrimeField(p)
        self.quiver = q
        self.dim = tuple(int(d) for d in dim)
        self.p = p
        self.shapes = [(self.dim[t], self.dim[s]) for s, t in q.arrow_ends()]
        self.offsets = list(itertools.accumulate([r * c for r, c in self.shapes], initial=0))
        self.n_entries = self.offsets[-1]

    @property
    def size(self) -> int:
        return self.p**self.n_entries

    def check_budget(self, budget: int) -> None:
        if self.size > budget:
            raise BudgetExceeded(
                f"Rep{self.dim} over F_{self.p} has {self.size} points, budget {budget}"
            )

    @cached_property
    def powers(self) -> np.ndarray:
        return self.p ** np.arange(self.n_entries - 1, -1, -1, dtype=np.int64)

    def digits(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        out = np.empty((codes.size, self.n_entries), dtype=np.int64)
        rest = codes.copy()
        for k in range(self.n_entries - 1, -1, -1):
            out[:, k] = rest % self.p
            rest //= self.p
        return out

    def encode_digits(self, digits: np.ndarray) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self.powers

    def group_order(self) -> int:
        out = 1
        for d in self.dim:
            out *= modp.gl_order(d, self.p)
        return out


class FFRep:
    """A representation over F_p: one (dim target x dim source) matrix per arrow."""

    __slots__ = ("quiver", "dim", "p", "mats", "_code")

    def __init__(self, quiver: Quiver, dim: Sequence[int], p: int, mats: Sequence[np.ndarray]):
        self.quiver = quiver
        self.dim = tuple(int(d) for d in dim)
        self.p = p
        ends = quiver.arrow_ends()
        if len(mats) != len(ends):
            raise ShapeMismatch("one matrix per arrow is required")
        fixed = []
        for (s, t), M in zip(ends, mats):
            M = np.asarray(M, dtype=np.int64).reshape(self.dim[t], self.dim[s]) % p
            M.setflags(write=False)
            fixed.append(M)
        self.mats = tuple(fixed)
        self._code = None

    @classmethod
    def from_dict(cls, quiver: Quiver, dim, p: int, mats: dict | None = None) -> "FFRep":
        mats = mats or {}
        unknown = set(mats) - {a.id for a in quiver.arrows}
        if unknown:
            raise ShapeMismatch(f"unknown arrows {sorted(map(str, unknown))}")
        out = []
        for (s, t), a in zip(quiver.arrow_ends(), quiver.arrows):
            shape = (dim[t], dim[s])
            M = np.asarray(mats.get(a.id, np.zeros(shape, dtype=np.int64)), dtype=np.int64)
            if M.size != shape[0] * shape[1]:
                raise ShapeMismatch(f"arrow {a.id!r} needs a {shape} matrix, got {M.shape}")
            out.append(M.reshape(shape))
        return cls(quiver, dim, p, out)

    @classmethod
    def from_code(cls, space: RepSpace, code: int) -> "FFRep":
        dig = space.digits(np.array([code]))[0]
        mats = [
            dig[o : o + r * c].reshape(r, c) for o, (r, c) in zip(space.offsets, space.shapes)
        ]
        rep = cls(space.quiver, space.dim, space.p, mats)
        rep._code = int(code)
        return rep

    @classmethod
    def zero(cls, quiver: Quiver, dim, p: int) -> "FFRep":
        return cls.from_dict(quiver, dim, p)

    @classmethod
    def simple(cls, quiver: Quiver, vertex, p: int) -> "FFRep":
        return cls.zero(quiver, quiver.simple(vertex), p)

    def matrix(self, arrow_id) -> np.ndarray:
        for a, M in zip(self.quiver.arrows, self.mats):
            if a.id == arrow_id:
                return M
        raise KeyError(arrow_id)

    @property
    def space(self) -> RepSpace:
        return _space(self.quiver, self.dim, self.p)

    @property
    def code(self) -> int:
        if self._code is None:
            flat = np.concatenate([M.ravel() for M in self.mats]) if self.mats else np.zeros(0)
            self._code = int(self.space.encode_digits(flat.reshape(1, -1))[0]) if flat.size else 0
        return self._code

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def key(self):
        return (self.quiver, self.dim, self.p, self.code)

    def __eq__(self, other):
        return isinstance(other, FFRep) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = ", ".join(f"{a.id}={M.tolist()}" for a, M in zip(self.quiver.arrows, self.mats))
        return f"FFRep(dim={self.dim}, p={self.p}, {body})"

    def act(self, g: Sequence[np.ndarray]) -> "FFRep":
        """g . x with x_a -> g_t x_a g_s^{-1}."""
        inv = [modp.inverse(gi, self.p) if gi.size else gi for gi in g]
        mats = [g[t] @ M @ inv[s] for (s, t), M in zip(self.quiver.arrow_ends(), self.mats)]
        return FFRep(self.quiver, self.dim, self.p, mats)

    def direct_sum(self, other: "FFRep") -> "FFRep":
        _same_field(self, other)
        dim = tuple(a + b for a, b in zip(self.dim, other.dim))
        mats = []
        for (s, t), A, B in zip(self.quiver.arrow_ends(), self.mats, other.mats):
            M = np.zeros((dim[t], dim[s]), dtype=np.int64)
            M[: A.shape[0], : A.shape[1]] = A
            M[A.shape[0] :, A.shape[1] :] = B
            mats.append(M)
        return FFRep(self.quiver, dim, self.p, mats)

    def to_json(self) -> dict:
        return {
            "dim": list(self.dim),
            "p": self.p,
            "maps": {str(a.id): M.tolist() for a, M in zip(self.quiver.arrows, self.mats)},
        }


@lru_cache(maxsize=None)
def _space(q: Quiver, dim: tuple, p: int) -> RepSpace:
    return RepSpace(q, dim, p)


def rep_space(q: Quiver, dim, p: int) -> RepSpace:
    return _space(q, tuple(int(d) for d in dim), p)


def _same_field(X: FFRep, Y: FFRep) -> None:
    if X.p != Y.p:
        raise FieldMismatch(f"F_{X.p} vs F_{Y.p}")
    if X.quiver != Y.quiver:
        raise ValidationError("representations of different quivers")


def enumerate_reps(q: Quiver, dim, p: int, budget: int = DEFAULT_REP_BUDGET) -> Iterator[FFRep]:
    """Every point of Rep(Q, dim)(F_p) once, in increasing code order."""
    space = rep_space(q, dim, p)
    space.check_budget(budget)
    for code in range(space.size):
        yield FFRep.from_code(space, code)


# ---------------------------------------------------------------------------
# isomorphism classes

def _gl_generators(n: int, p: int) -> list[np.ndarray]:
    """Generators of GL_n(F_p): a primitive-root scaling and all transvections."""
    if n == 0:
        return []
    gens = []
    w = modp.primitive_root(p)
    if w != 1:
        D = np.eye(n, dtype=np.int64)
        D[0, 0] = w
        gens.append(D)
    for i in range(n):
        for j in range(n):
            if i != j:
                T = np.eye(n, dtype=np.int64)
                T[i, j] = 1
                gens.append(T)
    return gens


def _act_on_all(space: RepSpace, digits: np.ndarray, g: list[np.ndarray]) -> np.ndarray:
    p = space.p
    out = np.empty_like(digits)
    inv = [modp.inverse(gi, p) if gi.size else gi for gi in g]
    for (s, t), off, (r, c) in zip(space.quiver.arrow_ends(), space.offsets, space.shapes):
        if r * c == 0:
            continue
        X = digits[:, off : off + r * c].reshape(-1, r, c)
        Y = np.matmul(np.matmul(g[t], X) % p, inv[s]) % p
        out[:, off : off + r * c] = Y.reshape(-1, r * c)
    return space.encode_digits(out)


@dataclass
class ClassTable:
    """Orbit decomposition of Rep(Q, alpha)(F_p) under GL(alpha)(F_p).

    ``labels[code]`` is the class index of a point; class ``k`` has canonical
    representative code ``rep_codes[k]`` (the lexicographically minimal point)
    and orbit size ``sizes[k]``. Classes are numbered in increasing order of
    their representative codes.
    """

    space: RepSpace
    labels: np.ndarray
    rep_codes: list[int]
    sizes: list[int]
    _cache: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.rep_codes)

    def representative(self, k: int) -> FFRep:
        return FFRep.from_code(self.space, self.rep_codes[k])

    def representatives(self) -> list[FFRep]:
        return [self.representative(k) for k in range(len(self))]

    def label(self, X: FFRep) -> int:
        return int(self.labels[X.code])

    def group_order(self) -> int:
        return self.space.group_order()


@lru_cache(maxsize=64)
def _class_table(q: Quiver, dim: tuple, p: int, budget: int) -> ClassTable:
    space = rep_space(q, dim, p)
    space.check_budget(budget)
    M = space.size
    if space.n_entries == 0:
        return ClassTable(space, np.zeros(1, dtype=np.int64), [0], [1])
    digits = space.digits(np.arange(M, dtype=np.int64))
    per_vertex = [_gl_generators(d, p) for d in space.dim]
    rows, cols = [], []
    for v, gens in enumerate(per_vertex):
        for gv in gens:
            g = [np.eye(d, dtype=np.int64) for d in space.dim]
            g[v] = gv
            image = _act_on_all(space, digits, g)
            rows.append(np.arange(M, dtype=np.int64))
            cols.append(image)
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        graph = coo_matrix((np.ones(r.size, dtype=np.int8), (r, c)), shape=(M, M))
        _, comp = connected_components(graph, directed=True, connection="weak")
    else:
        comp = np.arange(M)
    # relabel components by their minimal code
    first = np.full(comp.max() + 1, M, dtype=np.int64)
    np.minimum.at(first, comp, np.arange(M, dtype=np.int64))
    order = np.argsort(first)
    rank_of = np.empty_like(order)
    rank_of[order] = np.arange(order.size)
    labels = rank_of[comp]
    sizes = np.bincount(labels).tolist()
    rep_codes = first[order].tolist()
    labels.setflags(write=False)
    return ClassTable(space, labels, [int(x) for x in rep_codes], [int(x) for x in sizes])


def class_table(q: Quiver, dim, p: int, budget: int = DEFAULT_REP_BUDGET) -> ClassTable:
    return _class_table(q, tuple(int(d) for d in dim), p, budget)


def iso_classes(q: Quiver, dim, p: int, budget: int = DEFAULT_REP_BUDGET) -> list[tuple[FFRep, int]]:
    """Canonical representative and orbit size of every isomorphism class."""
    table = class_table(q, dim, p, budget)
    return [(table.representative(k), table.sizes[k]) for k in range(len(table))]


def isomorphic(X: FFRep, Y: FFRep, budget: int = DEFAULT_REP_BUDGET) -> bool:
    _same_field(X, Y)
    if X.dim != Y.dim:
        return False
    if fingerprint(X) != fingerprint(Y):
        return False
    table = class_table(X.quiver, X.dim, X.p, budget)
    return table.label(X) == table.label(Y)


# ---------------------------------------------------------------------------
# Hom, Ext, End

def _hom_system(X: FFRep, Y: FFRep) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """Matrix of g -> (g_t X_a - Y_a g_s)_a via vec(A G B) = (B^T kron A) vec(G)."""
    q = X.quiver
    blocks = []  # per vertex: (offset, rows=dim Y_i, cols=dim X_i)
    off = 0
    for i in range(q.n_vertices):
        blocks.append((off, Y.dim[i], X.dim[i]))
        off += Y.dim[i] * X.dim[i]
    eqs = []
    for (s, t), Xa, Ya in zip(q.arrow_ends(), X.mats, Y.mats):
        rows = Y.dim[t] * X.dim[s]
        if rows == 0:
            continue
        E = np.zeros((rows, off), dtype=np.int64)
        # g_t X_a: vec(g_t X_a I) = (X_a^T kron I) vec(g_t) with column-major vec
        ot, rt, ct = blocks[t]
        if rt * ct:
            E[:, ot : ot + rt * ct] += np.kron(Xa.T, np.eye(rt, dtype=np.int64))
        os_, rs, cs = blocks[s]
        if rs * cs:
            E[:, os_ : os_ + rs * cs] -= np.kron(np.eye(cs, dtype=np.int64), Ya)
        eqs.append(E % X.p)
    M = np.vstack(eqs) if eqs else np.zeros((0, off), dtype=np.int64)
    return M, blocks


def hom_basis(X: FFRep, Y: FFRep) -> list[tuple[np.ndarray, ...]]:
    """A basis of Hom(X, Y), each element a tuple of per-vertex matrices."""
    _same_field(X, Y)
    M, blocks = _hom_system(X, Y)
    n = blocks[-1][0] + blocks[-1][1] * blocks[-1][2] if blocks else 0
    if n == 0:
        return []
    N = modp.nullspace(M, X.p, ncols=n) if M.shape[0] else np.eye(n, dtype=np.int64)
    out = []
    for vec in N:
        out.append(
            tuple(vec[o : o + r * c].reshape(c, r).T for o, r, c in blocks)
        )
    return out


def hom_dim(X: FFRep, Y: FFRep) -> int:
    return len(hom_basis(X, Y))


def ext_dim(X: FFRep, Y: FFRep) -> int:
    """dim Ext^1(X, Y) as the cokernel of the standard-resolution map.

    The map (g_i) -> (g_t x_a - y_a g_s) is assembled column by column from
    its action on matrix units, independently of :func:`hom_basis`.
    """
    _same_field(X, Y)
    q = X.quiver
    if not q.is_acyclic:
        raise OrientedCycle("Ext via the standard resolution needs an acyclic quiver")
    p = X.p
    ends = q.arrow_ends()
    codomain = sum(Y.dim[t] * X.dim[s] for s, t in ends)
    cols = []
    for i in range(q.n_vertices):
        for r in range(Y.dim[i]):
            for c in range(X.dim[i]):
                parts = []
                for (s, t), Xa, Ya in zip(ends, X.mats, Y.mats):
                    img = np.zeros((Y.dim[t], X.dim[s]), dtype=np.int64)
                    if t == i:
                        img[r, :] += Xa[c, :]
                    if s == i:
                        img[:, c] -= Ya[:, r]
                    parts.append(img.ravel())
                cols.append(np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64))
    if not cols or codomain == 0:
        return codomain
    D = np.column_stack(cols) % p
    return codomain - modp.rank(D, p)


def end_basis(X: FFRep) -> np.ndarray:
    """End(X) basis as block-diagonal (total x total) matrices, shape (d, n, n)."""
    basis = hom_basis(X, X)
    n = X.total_dim
    out = np.zeros((len(basis), n, n), dtype=np.int64)
    for k, g in enumerate(basis):
        off = 0
        for gi in g:
            d = gi.shape[0]
            out[k, off : off + d, off : off + d] = gi
            off += d
    return out


@dataclass(frozen=True)
class EndScan:
    dim_end: int
    nontrivial_idempotent: bool
    nilpotents: int


def _scan_end(X: FFRep, budget: int, stop_on_idempotent: bool = False) -> EndScan:
    B = end_basis(X)
    d = B.shape[0]
    p = X.p
    if p**d > budget:
        raise BudgetExceeded(f"End has {p}^{d} elements, budget {budget}")
    n = X.total_dim
    I = np.eye(n, dtype=np.int64)
    flatB = B.reshape(d, n * n)
    squarings = max(1, int(np.ceil(np.log2(max(n, 2)))))
    nontrivial = False
    nilpotent = 0
    total = p**d
    for start in range(0, total, _SCAN_CHUNK):
        idx = np.arange(start, min(total, start + _SCAN_CHUNK), dtype=np.int64)
        coeffs = np.empty((idx.size, d), dtype=np.int64)
        rest = idx.copy()
        for k in range(d - 1, -1, -1):
            coeffs[:, k] = rest % p
            rest //= p
        E = ((coeffs @ flatB) % p).reshape(-1, n, n)
        E2 = np.matmul(E, E) % p
        idem = np.all((E2 == E).reshape(idx.size, -1), axis=1)
        zero = ~np.any(E.reshape(idx.size, -1), axis=1)
        ident = np.all((E == I).reshape(idx.size, -1), axis=1)
        if np.any(idem & ~zero & ~ident):
            nontrivial = True
            if stop_on_idempotent:
                return EndScan(d, True, -1)
        P = E2
        for _ in range(squarings - 1):
            P = np.matmul(P, P) % p
        nilpotent += int(np.sum(~np.any(P.reshape(idx.size, -1), axis=1)))
    return EndScan(d, nontrivial, nilpotent)


def _socle_escapes(dim_i: int, outgoing: list, incoming: list, p: int) -> bool:
    """Some v killed by every outgoing map lies outside the incoming images."""
    if dim_i == 0:
        return False
    if outgoing:
        ker = modp.nullspace(np.vstack(outgoing), p, ncols=dim_i)
    else:
        ker = np.eye(dim_i, dtype=np.int64)
    if ker.shape[0] == 0:
        return False
    imgs = [M for M in incoming if M.size]
    if not imgs:
        return True
    img = np.hstack(imgs)
    return modp.rank(np.hstack([img, ker.T]), p) > modp.rank(img, p)


def splits_off_simple(X: FFRep) -> bool:
    """True when some vertex simple is a direct summand of X.

    A vector v in X_i killed by all outgoing arrows and outside the incoming
    images spans a summand S_i; dually for a functional on X_i. Exact and
    cheap, used before the End scan.
    """
    p = X.p
    ends = X.quiver.arrow_ends()
    for i, d in enumerate(X.dim):
        out_maps = [M for (s, t), M in zip(ends, X.mats) if s == i and M.shape[0]]
        in_maps = [M for (s, t), M in zip(ends, X.mats) if t == i]
        if _socle_escapes(d, out_maps, in_maps, p):
            return True
        in_t = [M.T for M in in_maps if M.shape[1]]
        out_t = [M.T for (s, t), M in zip(ends, X.mats) if s == i]
        if _socle_escapes(d, in_t, out_t, p):
            return True
    return False


def is_indecomposable(X: FFRep, budget: int = DEFAULT_END_BUDGET) -> bool:
    if X.total_dim == 0:
        return False
    if hom_dim(X, X) == 1:
        return True
    if splits_off_simple(X):
        return False
    return not _scan_end(X, budget, stop_on_idempotent=True).nontrivial_idempotent


def is_absolutely_indecomposable(X: FFRep, budget: int = DEFAULT_END_BUDGET) -> bool:
    """Indecomposable with End/rad End equal to the base field.

    For a local End the radical is the set of non-units, which coincides with
    the nilpotent elements, so End/rad = F_p exactly when there are p^(d-1)
    nilpotents.
    """
    if X.total_dim == 0:
        return False
    d = hom_dim(X, X)
    if d == 1:
        return True
    if splits_off_simple(X):
        return False
    scan = _scan_end(X, budget, stop_on_idempotent=True)
    if scan.nontrivial_idempotent:
        return False
    return scan.nilpotents == X.p ** (d - 1)


def residue_degree(X: FFRep, budget: int = DEFAULT_END_BUDGET) -> int:
    """dim_{F_p} End/rad for an indecomposable X."""
    scan = _scan_end(X, budget)
    if scan.nontrivial_idempotent:
        raise ValidationError("residue degree is only defined for indecomposables")
    k = 0
    while X.p**k < scan.nilpotents:
        k += 1
    assert X.p**k == scan.nilpotents
    return scan.dim_end - k


def fingerprint(X: FFRep) -> tuple:
    """A prime-independent isomorphism invariant.

    dimension vector, dim End, and dim Hom against the vertex simples in both
    directions.
    """
    q = X.quiver
    sims = [FFRep.simple(q, v, X.p) for v in q.vertices]
    return (
        X.dim,
        hom_dim(X, X),
        tuple(hom_dim(S, X) for S in sims),
        tuple(hom_dim(X, S) for S in sims),
    )


# ---------------------------------------------------------------------------
# subrepresentations

Subspaces = tuple  # per-vertex column bases


def _closed(Xa: np.ndarray, Ws: np.ndarray, Wt: np.ndarray, p: int) -> bool:
    if Ws.shape[1] == 0:
        return True
    img = (Xa @ Ws) % p
    if not img.any():
        return True
    if Wt.shape[1] == 0:
        return False
    return modp.rank(np.hstack([Wt, img]), p) == Wt.shape[1]


def grassmannian_product_size(Z: FFRep, beta) -> int:
    out = 1
    for n, k in zip(Z.dim, beta):
        out *= modp.gaussian_binomial(n, k, Z.p)
    return out


def iter_subreps(Z: FFRep, beta, budget: int = DEFAULT_REP_BUDGET) -> Iterator[Subspaces]:
    """Tuples of subspaces W_i of dim beta_i closed under every arrow."""
    q = Z.quiver
    q.check(beta)
    beta = tuple(int(b) for b in beta)
    if any(b < 0 or b > n for b, n in zip(beta, Z.dim)):
        return
    if grassmannian_product_size(Z, beta) > budget:
        raise BudgetExceeded("Grassmannian product too large")
    ends = q.arrow_ends()
    nv = q.n_vertices
    # arrows become checkable once both endpoints are chosen
    ready = [[] for _ in range(nv)]
    for k, (s, t) in enumerate(ends):
        ready[max(s, t)].append(k)
    choices = [modp.subspaces(Z.dim[i], beta[i], Z.p) for i in range(nv)]
    chosen: list = [None] * nv

    def rec(i):
        if i == nv:
            yield tuple(chosen)
            return
        for W in choices[i]:
            chosen[i] = W
            if all(_closed(Z.mats[k], chosen[ends[k][0]], chosen[ends[k][1]], Z.p) for k in ready[i]):
                yield from rec(i + 1)
        chosen[i] = None

    yield from rec(0)


def enumerate_subreps(Z: FFRep, beta, budget: int = DEFAULT_REP_BUDGET) -> list[Subspaces]:
    return list(iter_subreps(Z, beta, budget))


def sub_and_quotient(Z: FFRep, W: Subspaces) -> tuple[FFRep, FFRep]:
    """The subrepresentation W and the quotient Z/W in adapted bases."""
    p = Z.p
    q = Z.quiver
    bases = []
    for i, Wi in enumerate(W):
        U = modp.complement_basis(Wi, Z.dim[i], p)
        T = np.hstack([Wi, U]) if Z.dim[i] else np.zeros((0, 0), dtype=np.int64)
        bases.append((T, modp.inverse(T, p) if Z.dim[i] else T, Wi.shape[1]))
    sub_mats, quo_mats = [], []
    for (s, t), M in zip(q.arrow_ends(), Z.mats):
        Ts, _, ks = bases[s]
        _, Tt_inv, kt = bases[t]
        N = (Tt_inv @ M @ Ts) % p if M.size else np.zeros(M.shape, dtype=np.int64)
        sub_mats.append(N[:kt, :ks])
        quo_mats.append(N[kt:, ks:])
    beta = tuple(Wi.shape[1] for Wi in W)
    gamma = tuple(n - b for n, b in zip(Z.dim, beta))
    return FFRep(q, beta, p, sub_mats), FFRep(q, gamma, p, quo_mats)


def has_subrep(Z: FFRep, beta, budget: int = DEFAULT_REP_BUDGET) -> Subspaces | None:
    for W in iter_subreps(Z, beta, budget):
        return W
    return None


def dims_below(alpha) -> Iterator[Vector]:
    """Every beta with 0 <= beta <= alpha componentwise."""
    return itertools.product(*(range(a + 1) for a in alpha))
