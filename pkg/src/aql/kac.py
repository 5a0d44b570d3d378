"""Kac polynomials by exhaustive counting over prime fields."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .errors import InsufficientPrimes, ValidationError
from .interp import IntPoly, fit_counts
from .modp import is_prime
from .quiver import Quiver, tits_form
from .reps import (
    DEFAULT_END_BUDGET,
    DEFAULT_REP_BUDGET,
    class_table,
    is_absolutely_indecomposable,
)


@dataclass(frozen=True)
class KacPolynomial:
    coefficients: tuple[int, ...]
    primes: tuple[int, ...]
    counts: dict
    degree_bound: int

    @property
    def poly(self) -> IntPoly:
        return IntPoly(self.coefficients)

    def __call__(self, x: int) -> int:
        return self.poly(x)

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "polynomial": str(self.poly),
            "primes": list(self.primes),
            "counts": {str(p): c for p, c in sorted(self.counts.items())},
            "degree_bound": self.degree_bound,
        }


def kac_degree_bound(q: Quiver, alpha) -> int:
    return max(0, 1 - tits_form(q, alpha))


def count_absolutely_indecomposable(
    q: Quiver,
    alpha,
    p: int,
    budget: int = DEFAULT_REP_BUDGET,
    end_budget: int = DEFAULT_END_BUDGET,
) -> int:
    """Number of isomorphism classes of absolutely indecomposable reps over F_p."""
    if not any(alpha):
        return 0
    table = class_table(q, alpha, p, budget)
    n = 0
    for k in range(len(table)):
        if is_absolutely_indecomposable(table.representative(k), end_budget):
            n += 1
    return n


def _count_job(args):
    return count_absolutely_indecomposable(*args)


def kac_polynomial(
    q: Quiver,
    alpha,
    primes: Sequence[int],
    budget: int = DEFAULT_REP_BUDGET,
    end_budget: int = DEFAULT_END_BUDGET,
    jobs: int = 1,
) -> KacPolynomial:
    q.check(alpha)
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValidationError("dimension vectors are non-negative")
    primes = tuple(int(p) for p in primes)
    if len(set(primes)) != len(primes) or not all(is_prime(p) for p in primes):
        raise ValidationError(f"primes must be distinct primes, got {primes}")
    bound = kac_degree_bound(q, alpha)
    if len(primes) < bound + 1:
        raise InsufficientPrimes(f"degree bound {bound} needs {bound + 1} primes")
    args = [(q, alpha, p, budget, end_budget) for p in primes]
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            counts = list(ex.map(_count_job, args))
    else:
        counts = [_count_job(a) for a in args]
    poly = fit_counts(primes, counts, bound)
    assert poly.degree <= bound, f"{poly} exceeds degree bound {bound}"
    return KacPolynomial(poly.coefficients, primes, dict(zip(primes, counts)), bound)
