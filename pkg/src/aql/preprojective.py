"""Representations of the double quiver: moment map, preprojective
relations, nilpotency, the forgetful projection and lift spaces."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import modp
from .errors import BudgetExceeded, ShapeMismatch
from .quiver import DoubleQuiver, Quiver, double_quiver, tits_form
from .reps import DEFAULT_REP_BUDGET, FFRep, hom_dim


@lru_cache(maxsize=None)
def doubled(q: Quiver) -> DoubleQuiver:
    return double_quiver(q)


class DoubleRep:
    """A point of Rep(Q-bar, alpha): forward matrices followed by starred ones."""

    __slots__ = ("base", "rep")

    def __init__(self, base: Quiver, rep: FFRep):
        dq = doubled(base)
        if rep.quiver != dq.quiver:
            raise ShapeMismatch("representation is not over the double quiver")
        self.base = base
        self.rep = rep

    @classmethod
    def from_parts(cls, X: FFRep, starred=None) -> "DoubleRep":
        """Forward part X plus starred matrices (a* has shape dim s(a) x dim t(a))."""
        q = X.quiver
        dq = doubled(q)
        mats = list(X.mats)
        ends = q.arrow_ends()
        if starred is None:
            starred = [np.zeros((X.dim[s], X.dim[t]), dtype=np.int64) for s, t in ends]
        if isinstance(starred, dict):
            starred = [
                starred.get(a.id, np.zeros((X.dim[s], X.dim[t]), dtype=np.int64))
                for a, (s, t) in zip(q.arrows, ends)
            ]
        if len(starred) != len(ends):
            raise ShapeMismatch("one starred matrix per arrow is required")
        for (s, t), Y in zip(ends, starred):
            Y = np.asarray(Y, dtype=np.int64)
            if Y.size != X.dim[s] * X.dim[t]:
                raise ShapeMismatch(f"starred matrix needs shape {(X.dim[s], X.dim[t])}")
            mats.append(Y.reshape(X.dim[s], X.dim[t]))
        return cls(q, FFRep(dq.quiver, X.dim, X.p, mats))

    @property
    def dim(self):
        return self.rep.dim

    @property
    def p(self) -> int:
        return self.rep.p

    @property
    def forward(self) -> tuple:
        return self.rep.mats[: len(self.base.arrows)]

    @property
    def starred(self) -> tuple:
        return self.rep.mats[len(self.base.arrows) :]

    def act(self, g) -> "DoubleRep":
        return DoubleRep(self.base, self.rep.act(g))

    def __repr__(self):
        return f"DoubleRep({self.rep!r})"


def moment_map(x: DoubleRep) -> tuple[np.ndarray, ...]:
    """mu_i = sum_{s(a)=i} x_{a*} x_a - sum_{t(a)=i} x_a x_{a*} (matrices act on columns)."""
    q = x.base
    p = x.p
    mu = [np.zeros((d, d), dtype=np.int64) for d in x.dim]
    for (s, t), A, B in zip(q.arrow_ends(), x.forward, x.starred):
        if A.size:
            mu[s] = (mu[s] + B @ A) % p
            mu[t] = (mu[t] - A @ B) % p
    trace = sum(int(np.trace(m)) for m in mu) % p
    assert trace == 0, "trace identity failed"
    return tuple(m % p for m in mu)


def is_pi_rep(x: DoubleRep, lam=None) -> bool:
    """Membership in mu^{-1}(lambda); lambda = 0 gives the preprojective algebra."""
    lam = tuple(lam) if lam is not None else (0,) * x.base.n_vertices
    x.base.check(lam)
    for m, l in zip(moment_map(x), lam):
        if not np.array_equal(m, (l * np.eye(m.shape[0], dtype=np.int64)) % x.p):
            return False
    return True


def radical_chain(x: DoubleRep) -> list[tuple[int, ...]]:
    """Dimension vectors of W_0 = V, W_{k+1} = sum of arrow images of W_k."""
    rep = x.rep
    p = x.p
    ends = rep.quiver.arrow_ends()
    W = [np.eye(d, dtype=np.int64) for d in rep.dim]
    chain = [tuple(w.shape[1] for w in W)]
    for _ in range(sum(rep.dim) + 1):
        images = [[] for _ in rep.dim]
        for (s, t), M in zip(ends, rep.mats):
            if W[s].shape[1] and M.size:
                images[t].append((M @ W[s]) % p)
        nxt = []
        for d, imgs in zip(rep.dim, images):
            if imgs:
                R, piv = modp.rref(np.hstack(imgs).T, p)
                nxt.append(R[: len(piv)].T.copy() if piv else np.zeros((d, 0), dtype=np.int64))
            else:
                nxt.append(np.zeros((d, 0), dtype=np.int64))
        W = nxt
        dims = tuple(w.shape[1] for w in W)
        if dims == chain[-1]:
            break
        chain.append(dims)
    return chain


def is_nilpotent(x: DoubleRep) -> bool:
    return not any(radical_chain(x)[-1])


def rho(x: DoubleRep) -> FFRep:
    """Forget the starred arrows."""
    return FFRep(x.base, x.dim, x.p, x.forward)


def is_rho_fixed(x: DoubleRep) -> bool:
    return not any(B.any() for B in x.starred)


@dataclass(frozen=True)
class LiftSpace:
    basis: tuple  # tuples of starred matrices
    dim: int


def _lift_system(X: FFRep) -> tuple[np.ndarray, list[tuple[int, int]]]:
    q = X.quiver
    p = X.p
    ends = q.arrow_ends()
    shapes = [(X.dim[s], X.dim[t]) for s, t in ends]
    cols = []
    for k, ((s, t), (r, c)) in enumerate(zip(ends, shapes)):
        A = X.mats[k]
        for i in range(r):
            for j in range(c):
                E = np.zeros((r, c), dtype=np.int64)
                E[i, j] = 1
                mu = [np.zeros((d, d), dtype=np.int64) for d in X.dim]
                if A.size:
                    mu[s] = mu[s] + E @ A
                    mu[t] = mu[t] - A @ E
                cols.append(np.concatenate([m.ravel() for m in mu]) % p)
    n_rows = sum(d * d for d in X.dim)
    if not cols:
        return np.zeros((n_rows, 0), dtype=np.int64), shapes
    return np.column_stack(cols), shapes


def lift_space(X: FFRep) -> LiftSpace:
    """Basis of {starred parts y : mu(X, y) = 0}; linear in y for fixed X."""
    M, shapes = _lift_system(X)
    n = M.shape[1]
    if n == 0:
        return LiftSpace((), 0)
    N = modp.nullspace(M, X.p, ncols=n) if M.shape[0] else np.eye(n, dtype=np.int64)
    basis = []
    for vec in N:
        parts, off = [], 0
        for r, c in shapes:
            parts.append(vec[off : off + r * c].reshape(r, c))
            off += r * c
        basis.append(tuple(parts))
    return LiftSpace(tuple(basis), len(basis))


def expected_lift_dim(X: FFRep) -> int:
    return hom_dim(X, X) - tits_form(X.quiver, X.dim)


@dataclass(frozen=True)
class NilpotentLifts:
    count: int
    lifts: tuple  # DoubleRep instances
    lift_space_dim: int


def nilpotent_lifts(X: FFRep, budget: int = DEFAULT_REP_BUDGET) -> NilpotentLifts:
    """All lifts y with mu(X, y) = 0 whose double representation is nilpotent."""
    space = lift_space(X)
    p = X.p
    if p**space.dim > budget:
        raise BudgetExceeded(f"lift space has {p}^{space.dim} points")
    found = []
    for coeffs in itertools.product(range(p), repeat=space.dim):
        starred = [
            sum((c * b[k] for c, b in zip(coeffs, space.basis)), np.zeros(shape, dtype=np.int64)) % p
            for k, shape in enumerate((X.dim[s], X.dim[t]) for s, t in X.quiver.arrow_ends())
        ]
        x = DoubleRep.from_parts(X, starred)
        if is_nilpotent(x):
            found.append(x)
    return NilpotentLifts(len(found), tuple(found), space.dim)
