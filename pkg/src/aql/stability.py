"""King (semi)stability of representations over a prime field."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonzeroTotalPairing
from .quiver import Quiver, Vector, euler_form, pairing
from .reps import DEFAULT_REP_BUDGET, FFRep, dims_below, has_subrep
from .roots import affine_data

UNSTABLE = "unstable"
SEMISTABLE = "semistable"
STABLE = "stable"


@dataclass(frozen=True)
class StabilityWeight:
    theta: Vector


@dataclass(frozen=True)
class StabilityVerdict:
    status: str
    witness_dim: Vector | None = None
    witness: tuple | None = None  # per-vertex column bases of the subrep

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.witness_dim is not None:
            out["witness_dim"] = list(self.witness_dim)
        return out


def stability_status(X: FFRep, theta, budget: int = DEFAULT_REP_BUDGET) -> StabilityVerdict:
    """King's criterion, tested over the base field.

    ``theta`` pairs to zero with dim X. A proper nonzero subrep with positive
    pairing destabilises; the witness has maximal pairing.
    """
    theta = tuple(theta.theta if isinstance(theta, StabilityWeight) else theta)
    X.quiver.check(theta)
    total = pairing(theta, X.dim)
    if total != 0:
        raise NonzeroTotalPairing(f"<theta, dim X> = {total}")
    proper = [b for b in dims_below(X.dim) if any(b) and tuple(b) != X.dim]
    proper.sort(key=lambda b: (-pairing(theta, b), b))
    boundary = False
    for beta in proper:
        value = pairing(theta, beta)
        if value < 0:
            break
        W = has_subrep(X, beta, budget)
        if W is None:
            continue
        if value > 0:
            return StabilityVerdict(UNSTABLE, tuple(beta), W)
        boundary = True
    return StabilityVerdict(SEMISTABLE if boundary else STABLE)


def regular_weight(q: Quiver) -> StabilityWeight:
    """lambda_reg: dim V -> e(delta, dim V)."""
    delta = affine_data(q).delta
    return StabilityWeight(tuple(euler_form(q, delta, q.simple(v)) for v in q.vertices))


def canonical_weight(q: Quiver, alpha) -> StabilityWeight:
    """lambda_alpha: dim V -> e(alpha, dim V) - e(dim V, alpha)."""
    q.check(alpha)
    return StabilityWeight(
        tuple(euler_form(q, alpha, q.simple(v)) - euler_form(q, q.simple(v), alpha) for v in q.vertices)
    )


def standard_stability(q: Quiver, kind: str, alpha: Sequence[int] | None = None) -> StabilityWeight:
    if kind == "regular":
        return regular_weight(q)
    if kind == "canonical":
        if alpha is None:
            raise ValueError("the canonical character needs a dimension vector")
        return canonical_weight(q, alpha)
    raise ValueError(f"unknown stability kind {kind!r}")


def is_generic(q: Quiver, lam, alpha, budget: int = 10_000_000) -> bool:
    lam = tuple(lam.theta if isinstance(lam, StabilityWeight) else lam)
    q.check(lam, alpha)
    volume = 1
    for a in alpha:
        volume *= a + 1
    if volume > budget:
        from .errors import BudgetExceeded

        raise BudgetExceeded(f"box of volume {volume}")
    if pairing(lam, alpha) != 0:
        return False
    alpha = tuple(alpha)
    for beta in dims_below(alpha):
        if any(beta) and beta != alpha and pairing(lam, beta) == 0:
            return False
    return True
