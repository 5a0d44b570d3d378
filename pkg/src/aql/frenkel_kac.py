"""The positive part of an affine Lie algebra through explicit structure
constants built from the sign cocycle (-1)^{e(a, b)}.

Basis: one vector e~_a per positive real root a, and for each level m >= 1
the classes alpha_i(m) of the non-extending simple roots in C[Q_0]/C delta.
All coefficients are exact (``Fraction``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import Callable, NamedTuple

from .errors import CutoffExceeded, NotAffine
from .quiver import Quiver, Vector, euler_form, symmetrized_form, tits_form
from .roots import affine_data, box

SYMMETRIZED = "symmetrized"
LITERAL = "literal"
EPS = "eps"
EPS_STAR = "eps-star"
# Where the sign of [alpha(m), e~_b] is evaluated. "grade" uses eps(m delta, b)
# and satisfies Jacobi; "class" uses eps(alpha_i, b) on the canonical
# representative and is kept as a diagnostic (it fails Jacobi already on K).
SIGN_GRADE = "grade"
SIGN_CLASS = "class"


class RealKey(NamedTuple):
    vector: Vector


class ImagKey(NamedTuple):
    m: int
    vertex: int  # vertex index, never the extending vertex


def key_grade(key, delta) -> Vector:
    if isinstance(key, RealKey):
        return key.vector
    return tuple(key.m * d for d in delta)


def key_label(key, q: Quiver) -> str:
    if isinstance(key, RealKey):
        return "e" + str(list(key.vector))
    return f"a_{q.vertices[key.vertex]}({key.m})"


def _sort_key(key):
    if isinstance(key, RealKey):
        return (0, key.vector)
    return (1, (key.m, key.vertex))


# ---------------------------------------------------------------------------
# cocycles

def epsilon(q: Quiver, alpha, beta) -> int:
    return -1 if euler_form(q, alpha, beta) % 2 else 1


def xi(q: Quiver, alpha) -> int:
    """(-1)^{1 + dim End} of an indecomposable of dimension alpha; +1 off the positive roots."""
    alpha = tuple(alpha)
    if not any(alpha) or any(a < 0 for a in alpha):
        return 1
    delta = affine_data(q).delta
    m = alpha[0] // delta[0]
    if tuple(m * d for d in delta) == alpha:
        return -1 if (1 + m) % 2 else 1
    return 1


def epsilon_star(q: Quiver, alpha, beta) -> int:
    s = tuple(a + b for a, b in zip(alpha, beta))
    return epsilon(q, alpha, beta) * xi(q, s) * xi(q, alpha) * xi(q, beta)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FKConfig:
    cocycle: str = EPS
    pairing_variant: str = SYMMETRIZED
    extending_vertex: object = None  # defaults to the first extending vertex
    level_cutoff: int = 2
    mixed_sign: str = SIGN_GRADE

    def to_json(self) -> dict:
        return {
            "cocycle": self.cocycle,
            "pairing_variant": self.pairing_variant,
            "extending_vertex": None if self.extending_vertex is None else str(self.extending_vertex),
            "level_cutoff": self.level_cutoff,
            "mixed_sign": self.mixed_sign,
        }


Element = dict  # key -> Fraction, no zero entries


def _clean(d: dict) -> Element:
    return {k: v for k, v in d.items() if v != 0}


def add_into(acc: dict, x: Element, scale=1) -> None:
    for k, v in x.items():
        acc[k] = acc.get(k, 0) + scale * v
        if acc[k] == 0:
            del acc[k]


class FKAlgebra:
    """Truncation of the algebra to grades at most ``level_cutoff * delta``."""

    def __init__(self, q: Quiver, cfg: FKConfig = FKConfig()):
        data = affine_data(q)
        self.quiver = q
        self.delta = data.delta
        self.n = data.n
        ext = cfg.extending_vertex
        if ext is None:
            ext = min(data.extending_vertices, key=lambda v: q.index[v])
        if ext not in data.extending_vertices:
            raise NotAffine(f"{ext!r} is not an extending vertex")
        self.cfg = replace(cfg, extending_vertex=ext)
        self.ext = q.index[ext]
        self.cutoff = cfg.level_cutoff
        self._cache: dict = {}
        if cfg.cocycle not in (EPS, EPS_STAR) or cfg.pairing_variant not in (SYMMETRIZED, LITERAL):
            raise ValueError(f"bad configuration {cfg}")

    # -- basis ---------------------------------------------------------------
    @cached_property
    def bound(self) -> Vector:
        return tuple(self.cutoff * d for d in self.delta)

    def within(self, grade) -> bool:
        return all(0 <= g <= b for g, b in zip(grade, self.bound))

    def is_positive_real(self, v) -> bool:
        return all(x >= 0 for x in v) and any(v) and tits_form(self.quiver, v) == 1

    def imaginary_level(self, v) -> int | None:
        m = v[0] // self.delta[0]
        if m >= 1 and tuple(m * d for d in self.delta) == tuple(v):
            return m
        return None

    @cached_property
    def real_keys(self) -> list[RealKey]:
        return [RealKey(v) for v in box(self.bound) if self.is_positive_real(v)]

    @cached_property
    def imag_keys(self) -> list[ImagKey]:
        return [
            ImagKey(m, i)
            for m in range(1, self.cutoff + 1)
            for i in range(self.quiver.n_vertices)
            if i != self.ext
        ]

    @cached_property
    def basis(self) -> list:
        return sorted(self.real_keys + self.imag_keys, key=_sort_key)

    def grade(self, key) -> Vector:
        return key_grade(key, self.delta)

    def keys_at(self, grade) -> list:
        grade = tuple(grade)
        return [k for k in self.basis if self.grade(k) == grade]

    # -- helpers ---------------------------------------------------------------
    def cocycle(self, a, b) -> int:
        if self.cfg.cocycle == EPS:
            return epsilon(self.quiver, a, b)
        return epsilon_star(self.quiver, a, b)

    def pair(self, a, b) -> int:
        if self.cfg.pairing_variant == SYMMETRIZED:
            return symmetrized_form(self.quiver, a, b)
        return euler_form(self.quiver, a, b)

    def canonical_class(self, alpha, m: int) -> Element:
        """alpha mod C delta, with zero coordinate at the extending vertex, at level m."""
        c = alpha[self.ext]
        rep = [a - c * d for a, d in zip(alpha, self.delta)]
        return _clean({ImagKey(m, i): Fraction(x) for i, x in enumerate(rep) if i != self.ext and x})

    def simple_root(self, v) -> RealKey:
        return RealKey(self.quiver.simple(v))

    def _check_cutoff(self, grade) -> None:
        if not self.within(grade):
            raise CutoffExceeded(f"grade {grade} beyond {self.cutoff} * delta")

    # -- bracket -----------------------------------------------------------------
    def bracket_keys(self, x, y) -> Element:
        ck = (x, y)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        out = self._bracket_keys(x, y)
        s = tuple(a + b for a, b in zip(self.grade(x), self.grade(y)))
        for k in out:
            assert self.grade(k) == s, f"grading violated: [{x}, {y}] has term {k}"
        self._cache[ck] = out
        return out

    def _bracket_keys(self, x, y) -> Element:
        if isinstance(x, ImagKey) and isinstance(y, ImagKey):
            return {}
        if isinstance(x, RealKey) and isinstance(y, ImagKey):
            return {k: -v for k, v in self.bracket_keys(y, x).items()}
        if isinstance(x, RealKey):
            a, b = x.vector, y.vector
            s = tuple(i + j for i, j in zip(a, b))
            sign = self.cocycle(a, b)
            if self.is_positive_real(s):
                self._check_cutoff(s)
                return {RealKey(s): Fraction(sign)}
            m = self.imaginary_level(s)
            if m is not None:
                self._check_cutoff(s)
                return {k: sign * v for k, v in self.canonical_class(a, m).items()}
            return {}
        # [alpha_i(m), e~_b]
        m, i = x
        b = y.vector
        alpha = self.quiver.simple(self.quiver.vertices[i])
        target = tuple(bb + m * d for bb, d in zip(b, self.delta))
        coeff = self.pair(alpha, b)
        if coeff == 0:
            return {}
        self._check_cutoff(target)
        if self.cfg.mixed_sign == SIGN_CLASS:
            sign = self.cocycle(alpha, b)
        else:
            sign = self.cocycle(tuple(m * d for d in self.delta), b)
        return {RealKey(target): Fraction(sign * coeff)}

    def bracket(self, x: Element, y: Element) -> Element:
        if isinstance(x, (RealKey, ImagKey)):
            x = {x: Fraction(1)}
        if isinstance(y, (RealKey, ImagKey)):
            y = {y: Fraction(1)}
        acc: dict = {}
        for kx, vx in x.items():
            for ky, vy in y.items():
                add_into(acc, self.bracket_keys(kx, ky), vx * vy)
        return acc


def fk_algebra(q: Quiver, cfg: FKConfig = FKConfig()) -> FKAlgebra:
    return FKAlgebra(q, cfg)


def canonical_class(q: Quiver, alpha, m: int, extending_vertex=None) -> Element:
    return FKAlgebra(q, FKConfig(extending_vertex=extending_vertex, level_cutoff=max(m, 1))).canonical_class(alpha, m)


def bracket(cfg: FKConfig, q: Quiver, x, y) -> Element:
    return FKAlgebra(q, cfg).bracket(x, y)


# ---------------------------------------------------------------------------
# verification

def _sum_grades(*gs) -> Vector:
    return tuple(sum(c) for c in zip(*gs))


def _fmt(alg: FKAlgebra, x: Element) -> dict:
    return {key_label(k, alg.quiver): str(v) for k, v in sorted(x.items(), key=lambda kv: _sort_key(kv[0]))}


def jacobi_residual(alg: FKAlgebra, x, y, z) -> Element:
    acc: dict = {}
    add_into(acc, alg.bracket(x, alg.bracket(y, z)))
    add_into(acc, alg.bracket(y, alg.bracket(z, x)))
    add_into(acc, alg.bracket(z, alg.bracket(x, y)))
    return acc


def verify_jacobi(alg: FKAlgebra, max_violations: int | None = None) -> dict:
    """Check Jacobi on every triple of distinct basis keys whose total grade is within the cutoff."""
    keys = alg.basis
    grades = [alg.grade(k) for k in keys]
    checked = 0
    violations = []
    for i, j in itertools.combinations(range(len(keys)), 2):
        gij = _sum_grades(grades[i], grades[j])
        if not alg.within(gij):
            continue
        for k in range(j + 1, len(keys)):
            if not alg.within(_sum_grades(gij, grades[k])):
                continue
            checked += 1
            res = jacobi_residual(alg, keys[i], keys[j], keys[k])
            if res:
                violations.append(
                    {
                        "x": key_label(keys[i], alg.quiver),
                        "y": key_label(keys[j], alg.quiver),
                        "z": key_label(keys[k], alg.quiver),
                        "residual": _fmt(alg, res),
                    }
                )
                if max_violations is not None and len(violations) >= max_violations:
                    break
    n = len(keys)
    total = n * (n - 1) * (n - 2) // 6
    return {
        "variant": alg.cfg.pairing_variant,
        "cocycle": alg.cfg.cocycle,
        "mixed_sign": alg.cfg.mixed_sign,
        "cutoff": alg.cutoff,
        "triples_checked": checked,
        "violations": violations,
        "skipped": total - checked,
    }


def verify_antisymmetry(alg: FKAlgebra) -> list:
    bad = []
    keys = alg.basis
    for x, y in itertools.combinations_with_replacement(keys, 2):
        if not alg.within(_sum_grades(alg.grade(x), alg.grade(y))):
            continue
        acc = dict(alg.bracket_keys(x, y))
        add_into(acc, alg.bracket_keys(y, x))
        if acc:
            bad.append((key_label(x, alg.quiver), key_label(y, alg.quiver)))
    return bad


def verify_serre(alg: FKAlgebra) -> dict:
    """(ad e~_i)^{1 - c_ij} e~_j = 0 for i != j, with the next lower power nonzero."""
    q = alg.quiver
    witnesses = []
    ok = True
    for vi, vj in itertools.permutations(q.vertices, 2):
        ai, aj = q.simple(vi), q.simple(vj)
        power = 1 - symmetrized_form(q, ai, aj)
        x = {RealKey(aj): Fraction(1)}
        lower = None
        for step in range(power):
            if step == power - 1:
                lower = x
            grade = tuple(b + (step + 1) * a for a, b in zip(ai, aj))
            if not alg.within(grade) and tits_form(q, grade) <= 1:
                x = None
                break
            x = alg.bracket({RealKey(ai): Fraction(1)}, x)
        entry = {"i": str(vi), "j": str(vj), "power": power}
        if x is None:
            entry["status"] = "skipped"
        else:
            entry["top_vanishes"] = not x
            lower_grade = tuple(b + (power - 1) * a for a, b in zip(ai, aj))
            if alg.within(lower_grade):
                entry["lower_nonzero"] = bool(lower)
            ok = ok and entry["top_vanishes"] and entry.get("lower_nonzero", True)
        witnesses.append(entry)
    return {"pass": ok, "cutoff": alg.cutoff, "relations": witnesses}


def graded_dimension(q: Quiver, alpha) -> int:
    alpha = tuple(alpha)
    data = affine_data(q)
    if any(a < 0 for a in alpha) or not any(alpha):
        return 0
    m = alpha[0] // data.delta[0]
    if m >= 1 and tuple(m * d for d in data.delta) == alpha:
        return data.n
    return 1 if tits_form(q, alpha) == 1 else 0


def twist_isomorphism_check(
    q: Quiver,
    cutoff: int,
    cfg: FKConfig = FKConfig(),
    phi: Callable | None = None,
) -> dict:
    """The diagonal map e~_a -> xi(a) e~_a, alpha(m) -> xi(m delta) alpha(m)
    intertwines the eps bracket with the eps* bracket on all basis pairs."""
    plain = FKAlgebra(q, replace(cfg, cocycle=EPS, level_cutoff=cutoff))
    twisted = FKAlgebra(q, replace(cfg, cocycle=EPS_STAR, level_cutoff=cutoff))

    def default_phi(key) -> int:
        return xi(q, plain.grade(key))

    phi = phi or default_phi

    def apply(x: Element) -> Element:
        return _clean({k: v * phi(k) for k, v in x.items()})

    failures = []
    checked = 0
    for x, y in itertools.combinations_with_replacement(plain.basis, 2):
        if not plain.within(_sum_grades(plain.grade(x), plain.grade(y))):
            continue
        checked += 1
        lhs = apply(plain.bracket_keys(x, y))
        rhs = twisted.bracket({x: Fraction(phi(x))}, {y: Fraction(phi(y))})
        if lhs != rhs:
            failures.append((key_label(x, q), key_label(y, q)))
    return {"pass": not failures, "pairs_checked": checked, "failures": failures}
