"""Dense linear algebra over a prime field F_p on small int64 numpy arrays."""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    phi = p - 1
    factors = {d for d in range(2, phi + 1) if phi % d == 0 and is_prime(d)}
    for g in range(2, p):
        if all(pow(g, phi // f, p) != 1 for f in factors):
            return g
    raise ValueError(p)


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        if col.any():
            A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    A = np.asarray(M)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(M, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis of {x : M x = 0} as the rows of the returned array."""
    A = np.asarray(M, dtype=np.int64)
    if A.size == 0:
        n = A.shape[1] if A.ndim == 2 else ncols
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(piv):
            basis[k, pc] = (-R[r, f]) % p
    return basis


def inverse(M, p: int) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64) % p
    n = A.shape[0]
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix mod p")
    return R[:, n:]


def solve_left(B, C, p: int) -> np.ndarray:
    """X with B X = C, where B has full column rank and C lies in its span."""
    B = np.asarray(B, dtype=np.int64) % p
    C = np.asarray(C, dtype=np.int64) % p
    k = B.shape[1]
    R, piv = rref(np.hstack([B, C]), p)
    if piv[:k] != list(range(k)) or any(c >= k for c in piv):
        raise ValueError("system has no solution")
    return R[:k, k:]


@lru_cache(maxsize=None)
def subspaces(n: int, k: int, p: int) -> tuple[np.ndarray, ...]:
    """All k-dimensional subspaces of F_p^n, each as an n x k column basis.

    Subspaces are enumerated once each through their reduced row echelon forms.
    """
    out = []
    for piv in itertools.combinations(range(n), k):
        free_slots = [(r, c) for r in range(k) for c in range(n) if c > piv[r] and c not in piv]
        for vals in itertools.product(range(p), repeat=len(free_slots)):
            R = np.zeros((k, n), dtype=np.int64)
            for r, c in enumerate(piv):
                R[r, c] = 1
            for (r, c), v in zip(free_slots, vals):
                R[r, c] = v
            R.setflags(write=False)
            out.append(R.T)
    return tuple(out)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def complement_basis(W, n: int, p: int) -> np.ndarray:
    """Columns of the identity completing the column basis W to a basis of F_p^n."""
    W = np.asarray(W, dtype=np.int64)
    if n == 0 or W.size == 0:
        return np.eye(n, dtype=np.int64)
    _, piv = rref(W.T, p)
    rest = [c for c in range(n) if c not in piv]
    return np.eye(n, dtype=np.int64)[:, rest]


def gl_order(n: int, p: int) -> int:
    out = 1
    for k in range(n):
        out *= p**n - p**k
    return out
