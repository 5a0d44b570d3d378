"""Affine root systems: reflections, the Coxeter transformation, defect,
root classification, Coxeter orbits and tube periods."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from .errors import BudgetExceeded, NotAffine, OrientedCycle
from .quiver import (
    AffineData,
    Quiver,
    Vector,
    classify_affine,
    euler_form,
    symmetrized_form,
    tits_form,
)

DEFAULT_BOX_BUDGET = 2_000_000


@lru_cache(maxsize=None)
def affine_data(q: Quiver) -> AffineData:
    return classify_affine(q)


def simple_reflection(q: Quiver, i, beta) -> Vector:
    q.check(beta)
    ai = q.simple(i)
    c = symmetrized_form(q, beta, ai)
    k = q.index[i]
    out = list(beta)
    out[k] -= c
    return tuple(out)


@dataclass(frozen=True)
class CoxeterData:
    matrix: np.ndarray
    euler_matrix: np.ndarray
    inverse_euler: np.ndarray

    def apply(self, alpha) -> Vector:
        return tuple(int(x) for x in self.matrix @ np.asarray(alpha, dtype=np.int64))

    def apply_inverse(self, alpha) -> Vector:
        inv = np.asarray(sympy.Matrix(self.matrix.tolist()).inv().tolist(), dtype=np.int64)
        return tuple(int(x) for x in inv @ np.asarray(alpha, dtype=np.int64))


@lru_cache(maxsize=None)
def coxeter_matrix(q: Quiver) -> CoxeterData:
    """c = -E^{-1} E^T, characterised by e(a, b) = -e(b, c a)."""
    if not q.is_acyclic:
        raise OrientedCycle("the Euler matrix is only unimodular for acyclic quivers")
    E = q.euler_matrix
    Einv = sympy.Matrix(E.tolist()).inv()
    assert all(x.is_integer for x in Einv)
    Einv = np.asarray(Einv.tolist(), dtype=np.int64)
    c = -Einv @ E.T
    return CoxeterData(c, E, Einv)


def reflection_product_matrix(q: Quiver) -> np.ndarray:
    """Product of all simple reflections, sinks applied first.

    Used as an independent cross-check of :func:`coxeter_matrix`.
    """
    order = q.topological_order
    if order is None:
        raise OrientedCycle("no admissible order on a quiver with an oriented cycle")
    n = q.n_vertices
    M = np.eye(n, dtype=np.int64)
    # the first reflection applied is at the last vertex of a topological order (a sink)
    for k in order:
        v = q.vertices[k]
        S = np.column_stack([simple_reflection(q, v, tuple(np.eye(n, dtype=int)[j])) for j in range(n)])
        M = M @ S
    return M


def defect(q: Quiver, alpha) -> int:
    delta = affine_data(q).delta
    return euler_form(q, delta, alpha)


@dataclass(frozen=True)
class Root:
    vector: Vector
    is_real: bool
    is_imaginary: bool
    is_regular: bool
    level: int
    multiplicity: int

    @property
    def is_positive(self) -> bool:
        return all(x >= 0 for x in self.vector)


def _is_multiple_of(alpha, delta) -> int | None:
    m = alpha[0] // delta[0] if delta[0] else 0
    if tuple(m * d for d in delta) == tuple(alpha):
        return m
    return None


def is_root(q: Quiver, alpha) -> bool:
    return any(alpha) and tits_form(q, alpha) <= 1


def is_positive_root(q: Quiver, alpha) -> bool:
    return all(x >= 0 for x in alpha) and is_root(q, alpha)


def classify_root(q: Quiver, alpha) -> Root | None:
    """Classify ``alpha``; returns ``None`` for a non-root."""
    q.check(alpha)
    alpha = tuple(int(x) for x in alpha)
    if not is_root(q, alpha):
        return None
    data = affine_data(q)
    delta = data.delta
    m = _is_multiple_of(alpha, delta)
    imaginary = m is not None
    regular = euler_form(q, delta, alpha) == 0
    if imaginary:
        level = abs(m)
    else:
        level = 0
        cur = alpha
        while True:
            nxt = tuple(a - d for a, d in zip(cur, delta))
            if all(x >= 0 for x in nxt) and is_root(q, nxt):
                level += 1
                cur = nxt
            else:
                break
    mult = data.n if imaginary else 1
    return Root(alpha, not imaginary, imaginary, regular, level, mult)


def box(bound) -> itertools.product:
    return itertools.product(*(range(b + 1) for b in bound))


def enumerate_positive_roots(q: Quiver, bound, budget: int = DEFAULT_BOX_BUDGET) -> list[Root]:
    q.check(bound)
    if any(b < 0 for b in bound):
        raise ValueError("bound must be non-negative")
    volume = 1
    for b in bound:
        volume *= b + 1
    if volume > budget:
        raise BudgetExceeded(f"root box of volume {volume} exceeds budget {budget}")
    affine_data(q)
    out = []
    for alpha in box(bound):
        if not any(alpha):
            continue
        r = classify_root(q, alpha)
        if r is not None:
            out.append(r)
    out.sort(key=lambda r: r.vector)
    return out


@dataclass(frozen=True)
class Orbit:
    elements: tuple[Vector, ...]

    @property
    def period(self) -> int:
        return len(self.elements)

    def total(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.elements))


INFINITE = "infinite"


def coxeter_orbit(q: Quiver, alpha, max_steps: int = 1000):
    """The c-orbit of a regular root, or :data:`INFINITE` when the defect is nonzero."""
    alpha = tuple(int(x) for x in alpha)
    if defect(q, alpha) != 0:
        return INFINITE
    cox = coxeter_matrix(q)
    elems = [alpha]
    cur = cox.apply(alpha)
    while cur != alpha:
        elems.append(cur)
        if len(elems) > max_steps:
            return INFINITE
        cur = cox.apply(cur)
    return Orbit(tuple(elems))


def tube_skeleton(q: Quiver) -> list[int]:
    """Periods N >= 2 of the non-homogeneous tubes, sorted.

    Regular-simple orbits are recognised as the c-orbits of positive regular
    real roots strictly below delta whose elements sum to exactly delta.
    """
    data = affine_data(q)
    if not data.acyclic:
        raise OrientedCycle("tubes are only defined for acyclic affine quivers")
    delta = data.delta
    seen: set[Vector] = set()
    periods = []
    for r in enumerate_positive_roots(q, delta):
        v = r.vector
        if not r.is_real or not r.is_regular or v == delta or v in seen:
            continue
        orbit = coxeter_orbit(q, v)
        assert orbit is not INFINITE
        seen.update(orbit.elements)
        assert all(all(x >= 0 for x in e) for e in orbit.elements), "orbit left the positive cone"
        total = orbit.total()
        m = _is_multiple_of(total, delta)
        assert m is not None and m > 0, f"orbit of {v} sums to {total}, not a multiple of delta"
        if m == 1:
            periods.append(orbit.period)
    periods.sort()
    if sum(p - 1 for p in periods) != data.n - 1:
        # distinct tubes sharing regular-simple dimension vectors would merge here
        raise AssertionError(f"tube periods {periods} violate sum(N - 1) = n - 1 with n = {data.n}")
    return periods
