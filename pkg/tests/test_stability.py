import itertools

import numpy as np
import pytest

from aql import modp
from aql.catalog import a2_tilde, kronecker
from aql.errors import BudgetExceeded, NonzeroTotalPairing
from aql.quiver import pairing
from aql.reps import FFRep, class_table, is_indecomposable, iso_classes
from aql.stability import (
    SEMISTABLE,
    STABLE,
    UNSTABLE,
    canonical_weight,
    is_generic,
    regular_weight,
    stability_status,
    standard_stability,
)


def pair(K, a, b, p=3):
    return FFRep.from_dict(K, (1, 1), p, {"a": [[a]], "b": [[b]]})


def naive_status(X, theta):
    """King's criterion over every subspace tuple, without pruning."""
    p = X.p
    best = None
    for beta in itertools.product(*(range(d + 1) for d in X.dim)):
        if not any(beta) or beta == X.dim:
            continue
        for W in itertools.product(*(modp.subspaces(n, b, p) for n, b in zip(X.dim, beta))):
            closed = True
            for (s, t), M in zip(X.quiver.arrow_ends(), X.mats):
                if W[s].shape[1] == 0:
                    continue
                img = (M @ W[s]) % p
                stacked = np.hstack([W[t], img]) if W[t].size else img
                closed &= modp.rank(stacked, p) == W[t].shape[1]
            if closed:
                v = pairing(theta, beta)
                best = v if best is None else max(best, v)
    if best is None or best < 0:
        return STABLE
    return UNSTABLE if best > 0 else SEMISTABLE


def test_weights(K):
    assert regular_weight(K).theta == (1, -1)
    assert canonical_weight(K, (2, 1)).theta == (2, -4)
    assert standard_stability(K, "regular") == regular_weight(K)
    for alpha in [(2, 1), (3, 2), (1, 1)]:
        assert pairing(canonical_weight(K, alpha).theta, alpha) == 0
    with pytest.raises(ValueError):
        standard_stability(K, "canonical")


def test_status_examples(K):
    lam = regular_weight(K)
    assert stability_status(pair(K, 1, 0), lam).status == STABLE
    v = stability_status(FFRep.zero(K, (1, 1), 3), lam)
    assert v.status == UNSTABLE and v.witness_dim == (1, 0)
    assert stability_status(FFRep.simple(K, 0, 3), (0, 5)).status == STABLE
    with pytest.raises(NonzeroTotalPairing):
        stability_status(pair(K, 1, 0), (1, 0))


def test_witness_has_maximal_pairing(K):
    Z = FFRep.zero(K, (2, 1), 2)
    theta = canonical_weight(K, (2, 1)).theta  # (2, -4): pairs to 0 with (2, 1)
    v = stability_status(Z, theta)
    assert v.status == UNSTABLE and v.witness_dim == (2, 0)


@pytest.mark.parametrize(
    "make, dim, p",
    [(kronecker, (1, 1), 3), (kronecker, (2, 2), 2), (kronecker, (2, 1), 3), (a2_tilde, (1, 1, 1), 3)],
)
def test_status_matches_unpruned_scan_and_stable_implies_indecomposable(make, dim, p):
    q = make()
    weights = [regular_weight(q).theta, canonical_weight(q, dim).theta]
    for theta in weights:
        if pairing(theta, dim) != 0:
            continue
        for X in class_table(q, dim, p).representatives():
            status = stability_status(X, theta).status
            assert status == naive_status(X, theta)
            if status == STABLE:
                assert is_indecomposable(X)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_regular_stable_classes_at_delta(p):
    K = kronecker()
    lam = regular_weight(K)
    stable = [X for X, _ in iso_classes(K, (1, 1), p) if stability_status(X, lam).status == STABLE]
    assert len(stable) == p + 1


def test_is_generic(K):
    assert is_generic(K, (1, -1), (1, 1))
    assert not is_generic(K, (0, 0), (1, 1))
    assert not is_generic(K, regular_weight(K), (2, 2))
    assert not is_generic(K, (1, 0), (1, 1))  # nonzero total pairing
    with pytest.raises(BudgetExceeded):
        is_generic(K, (1, -1), (10**4, 10**4), budget=1000)
