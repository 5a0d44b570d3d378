"""Exact Lagrange interpolation of point counts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InsufficientPrimes


def lagrange(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Ascending coefficients of the unique polynomial of degree < len(xs)."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # multiply basis by (x - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += c * yi / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPoly:
    coefficients: tuple[int, ...]  # ascending degree

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    @property
    def degree(self) -> int:
        if not any(self.coefficients):
            return -1
        return max(k for k, c in enumerate(self.coefficients) if c)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{mono}")
        if not terms:
            return "0"
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def integer_polynomial(xs: Sequence[int], ys: Sequence[int]) -> IntPoly:
    coeffs = lagrange(xs, ys)
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError(f"interpolant {coeffs} of counts {list(ys)} is not integral")
    out = [int(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return IntPoly(tuple(out))


def fit_counts(primes: Sequence[int], counts: Sequence[int], degree_bound: int) -> IntPoly:
    """Interpolate on the first degree_bound + 1 primes, verify on the rest."""
    need = degree_bound + 1
    if len(primes) < need:
        raise InsufficientPrimes(f"degree bound {degree_bound} needs {need} primes, got {len(primes)}")
    poly = integer_polynomial(primes[:need], counts[:need])
    for p, c in zip(primes[need:], counts[need:]):
        if poly(p) != c:
            raise AssertionError(
                f"held-out prime {p}: interpolant {poly} predicts {poly(p)}, counted {c}"
            )
    return poly
