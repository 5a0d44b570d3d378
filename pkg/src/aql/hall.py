"""Hall numbers over F_p and their Euler-characteristic specialisation.

Hall numbers count subrepresentations with prescribed sub and quotient.
Over C the structure constants of the constructible-function Hall algebra
are Euler characteristics of these subvarieties; here they are recovered as
the value at q = 1 of the interpolated point count.

For commutator calculations functions are taken constant on *types*:
classes sharing the invariants of :func:`aql.reps.fingerprint`. Types are
defined uniformly in p, which lets the same function be evaluated over
several primes and interpolated.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import InsufficientPrimes, ValidationError
from .interp import IntPoly, fit_counts
from .quiver import Quiver, Vector
from .reps import (
    DEFAULT_REP_BUDGET,
    FFRep,
    _same_field,
    class_table,
    fingerprint,
    iter_subreps,
    sub_and_quotient,
)


def subrep_census(Z: FFRep, beta, budget: int = DEFAULT_REP_BUDGET) -> Counter:
    """Counter of (class of W, class of Z/W) over subreps W of dimension beta."""
    beta = tuple(int(b) for b in beta)
    gamma = tuple(n - b for n, b in zip(Z.dim, beta))
    sub_t = class_table(Z.quiver, beta, Z.p, budget)
    quo_t = class_table(Z.quiver, gamma, Z.p, budget)
    out = Counter()
    for W in iter_subreps(Z, beta, budget):
        S, Q = sub_and_quotient(Z, W)
        out[(sub_t.label(S), quo_t.label(Q))] += 1
    return out


def hall_number(X: FFRep, Y: FFRep, Z: FFRep, budget: int = DEFAULT_REP_BUDGET) -> int:
    """g^Z_{X,Y}: subreps W of Z with W = X and Z/W = Y up to isomorphism."""
    _same_field(X, Z)
    _same_field(Y, Z)
    if tuple(a + b for a, b in zip(X.dim, Y.dim)) != Z.dim:
        return 0
    sub_t = class_table(Z.quiver, X.dim, Z.p, budget)
    quo_t = class_table(Z.quiver, Y.dim, Z.p, budget)
    census = subrep_census(Z, X.dim, budget)
    return census.get((sub_t.label(X), quo_t.label(Y)), 0)


@dataclass(frozen=True)
class RepTemplate:
    """A representation given by integer matrices, reduced mod each prime."""

    quiver: Quiver
    dim: Vector
    maps: tuple = ()  # ((arrow id, nested list), ...)

    @classmethod
    def make(cls, quiver: Quiver, dim, maps: dict | None = None) -> "RepTemplate":
        maps = maps or {}
        frozen = tuple(
            (k, tuple(tuple(int(x) for x in row) for row in np.asarray(v).reshape(-1, np.asarray(v).shape[-1]).tolist()))
            for k, v in sorted(maps.items(), key=lambda kv: str(kv[0]))
        )
        return cls(quiver, tuple(int(d) for d in dim), frozen)

    def at(self, p: int) -> FFRep:
        return FFRep.from_dict(self.quiver, self.dim, p, {k: np.array(v) for k, v in self.maps})


@dataclass(frozen=True)
class HallCount:
    counts: dict
    polynomial: IntPoly
    euler_characteristic: int
    degree_bound: int

    def to_json(self) -> dict:
        return {
            "counts": {str(p): c for p, c in sorted(self.counts.items())},
            "polynomial": str(self.polynomial),
            "coefficients": list(self.polynomial.coefficients),
            "euler_characteristic": self.euler_characteristic,
            "degree_bound": self.degree_bound,
        }


def grassmannian_degree_bound(total, beta) -> int:
    return sum(b * (n - b) for n, b in zip(total, beta))


def hall_euler_characteristic(
    X: RepTemplate,
    Y: RepTemplate,
    Z: RepTemplate,
    primes: Sequence[int],
    budget: int = DEFAULT_REP_BUDGET,
) -> HallCount:
    primes = tuple(primes)
    bound = grassmannian_degree_bound(Z.dim, X.dim)
    if tuple(a + b for a, b in zip(X.dim, Y.dim)) != Z.dim:
        zero = IntPoly((0,))
        return HallCount({p: 0 for p in primes}, zero, 0, bound)
    if len(primes) < bound + 1:
        raise InsufficientPrimes(f"degree bound {bound} needs {bound + 1} primes")
    counts = [hall_number(X.at(p), Y.at(p), Z.at(p), budget) for p in primes]
    poly = fit_counts(primes, counts, bound)
    return HallCount(dict(zip(primes, counts)), poly, poly(1), bound)


# ---------------------------------------------------------------------------
# constructible functions on types

@lru_cache(maxsize=128)
def _class_types(q: Quiver, dim: tuple, p: int, budget: int) -> tuple:
    table = class_table(q, dim, p, budget)
    return tuple(fingerprint(table.representative(k)) for k in range(len(table)))


def types_at(q: Quiver, dim, p: int, budget: int = DEFAULT_REP_BUDGET) -> list:
    """Distinct types at a dimension over F_p, in order of first appearance."""
    seen = {}
    for k, t in enumerate(_class_types(q, tuple(dim), p, budget)):
        seen.setdefault(t, k)
    return list(seen)


def type_representative(q: Quiver, dim, p: int, t, budget: int = DEFAULT_REP_BUDGET) -> FFRep:
    """Canonical class representative of the first class of type t."""
    types = _class_types(q, tuple(dim), p, budget)
    k = types.index(t)
    return class_table(q, dim, p, budget).representative(k)


def type_of(X: FFRep, budget: int = DEFAULT_REP_BUDGET):
    table = class_table(X.quiver, X.dim, X.p, budget)
    return _class_types(X.quiver, X.dim, X.p, budget)[table.label(X)]


@dataclass
class ChiFunction:
    """A function on the types of one dimension vector with integer values."""

    quiver: Quiver
    dim: Vector
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = {k: v for k, v in self.values.items() if v != 0}

    def __call__(self, t) -> int:
        return self.values.get(t, 0)

    def __add__(self, other: "ChiFunction") -> "ChiFunction":
        assert self.dim == other.dim
        keys = set(self.values) | set(other.values)
        return ChiFunction(self.quiver, self.dim, {k: self(k) + other(k) for k in keys})

    def __neg__(self) -> "ChiFunction":
        return ChiFunction(self.quiver, self.dim, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: "ChiFunction") -> "ChiFunction":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.values


def characteristic(X: FFRep) -> ChiFunction:
    return ChiFunction(X.quiver, X.dim, {type_of(X): 1})


def _type_census(Z: FFRep, beta, budget: int) -> Counter:
    gamma = tuple(n - b for n, b in zip(Z.dim, beta))
    sub_types = _class_types(Z.quiver, tuple(beta), Z.p, budget)
    quo_types = _class_types(Z.quiver, gamma, Z.p, budget)
    census = subrep_census(Z, beta, budget)
    out = Counter()
    for (ls, lq), n in census.items():
        out[(sub_types[ls], quo_types[lq])] += n
    return out


def chi_product(
    f: ChiFunction, g: ChiFunction, primes: Sequence[int], budget: int = DEFAULT_REP_BUDGET
) -> ChiFunction:
    """(f * g)(Z) = sum over W in Z of f(W) g(Z/W), weighted by Euler characteristic."""
    q = f.quiver
    total = tuple(a + b for a, b in zip(f.dim, g.dim))
    primes = tuple(primes)
    bound = grassmannian_degree_bound(total, f.dim)
    if len(primes) < bound + 1:
        raise InsufficientPrimes(f"degree bound {bound} needs {bound + 1} primes")
    types = types_at(q, total, primes[0], budget)
    for p in primes[1:]:
        if set(types_at(q, total, p, budget)) != set(types):
            raise ValidationError(f"types at {total} differ between F_{primes[0]} and F_{p}")
    out = {}
    for t in types:
        per_prime = [_type_census(type_representative(q, total, p, t, budget), f.dim, budget) for p in primes]
        value = 0
        pairs = set().union(*per_prime)
        for pair in sorted(pairs, key=repr):
            coeff = f(pair[0]) * g(pair[1])
            if coeff == 0:
                continue
            counts = [c.get(pair, 0) for c in per_prime]
            value += coeff * fit_counts(primes, counts, bound)(1)
        out[t] = value
    return ChiFunction(q, total, out)


def chi_commutator(f: ChiFunction, g: ChiFunction, primes, budget: int = DEFAULT_REP_BUDGET) -> ChiFunction:
    return chi_product(f, g, primes, budget) - chi_product(g, f, primes, budget)


def ad_power(f: ChiFunction, g: ChiFunction, k: int, primes, budget: int = DEFAULT_REP_BUDGET) -> ChiFunction:
    """(ad f)^k g."""
    out = g
    for _ in range(k):
        out = chi_commutator(f, out, primes, budget)
    return out


def simple_characteristic(q: Quiver, vertex, p: int = 2) -> ChiFunction:
    return characteristic(FFRep.simple(q, vertex, p))
