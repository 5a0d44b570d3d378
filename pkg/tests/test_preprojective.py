import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aql import modp
from aql.catalog import a2_tilde, kronecker
from aql.errors import ShapeMismatch
from aql.hall import hall_number
from aql.preprojective import (
    DoubleRep,
    doubled,
    expected_lift_dim,
    is_nilpotent,
    is_pi_rep,
    is_rho_fixed,
    lift_space,
    moment_map,
    nilpotent_lifts,
    radical_chain,
    rho,
)
from aql.quiver import tits_form
from aql.reps import FFRep, class_table, enumerate_reps, enumerate_subreps, hom_dim, iso_classes, sub_and_quotient
from aql.stability import STABLE, regular_weight, stability_status


def kpair(K, a, b, astar=0, bstar=0, p=3):
    X = FFRep.from_dict(K, (1, 1), p, {"a": [[a]], "b": [[b]]})
    return DoubleRep.from_parts(X, {"a": [[astar]], "b": [[bstar]]})


def test_moment_map_examples(K):
    x = kpair(K, 1, 1, 1, -1)
    assert [m.tolist() for m in moment_map(x)] == [[[0]], [[0]]]
    assert is_pi_rep(x)
    zero = DoubleRep.from_parts(FFRep.zero(K, (1, 1), 3))
    assert all(not m.any() for m in moment_map(zero))
    y = kpair(K, 1, 0, 1, 0)
    assert is_pi_rep(y, (1, -1))
    assert not is_pi_rep(y, (0, 0))
    # trace obstruction: sum lambda_i alpha_i != 0 is never satisfiable
    for X in enumerate_reps(doubled(K).quiver, (1, 1), 3):
        assert not is_pi_rep(DoubleRep(K, X), (1, 1))


def test_shape_checks(K):
    X = FFRep.zero(K, (1, 1), 3)
    with pytest.raises(ShapeMismatch):
        DoubleRep.from_parts(X, [np.zeros((1, 1))])
    with pytest.raises(ShapeMismatch):
        DoubleRep(K, X)


@st.composite
def double_reps(draw):
    q = draw(st.sampled_from([kronecker(), a2_tilde()]))
    p = draw(st.sampled_from([2, 3, 5, 7]))
    dim = tuple(draw(st.integers(0, 3)) for _ in q.vertices)
    dq = doubled(q).quiver
    mats = []
    for s, t in dq.arrow_ends():
        n = dim[t] * dim[s]
        entries = draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n))
        mats.append(np.array(entries, dtype=np.int64).reshape(dim[t], dim[s]))
    return DoubleRep(q, FFRep(dq, dim, p, mats))


def _random_gl(rng, n, p):
    while True:
        g = rng.integers(0, p, (n, n))
        if modp.rank(g, p) == n:
            return g


@given(double_reps(), st.integers(0, 2**32 - 1))
def test_moment_map_trace_and_equivariance(x, seed):
    p = x.p
    mu = moment_map(x)  # asserts the trace identity internally
    assert sum(int(np.trace(m)) for m in mu) % p == 0
    rng = np.random.default_rng(seed)
    g = [_random_gl(rng, d, p) if d else np.zeros((0, 0), dtype=np.int64) for d in x.dim]
    lhs = moment_map(x.act(g))
    for gi, mi, li in zip(g, mu, lhs):
        if gi.size:
            assert ((gi @ mi @ modp.inverse(gi, p) - li) % p == 0).all()


def test_nilpotency_examples(K):
    assert is_nilpotent(kpair(K, 1, 0))
    assert radical_chain(kpair(K, 1, 0)) == [(1, 1), (0, 1), (0, 0)]
    x = kpair(K, 1, 0, 0, 1)
    assert is_pi_rep(x) and not is_nilpotent(x)
    assert is_nilpotent(DoubleRep.from_parts(FFRep.zero(K, (1, 1), 3)))


def test_rho(K):
    X = FFRep.from_dict(K, (1, 1), 3, {"a": [[2]]})
    x = DoubleRep.from_parts(X)
    assert rho(x) == X and is_rho_fixed(x)
    assert not is_rho_fixed(kpair(K, 1, 0, 1, 0))


def test_lift_space_examples(K):
    X = FFRep.from_dict(K, (1, 1), 3, {"a": [[1]]})
    space = lift_space(X)
    assert space.dim == 1 == expected_lift_dim(X)
    (basis,) = space.basis
    assert basis[0].tolist() == [[0]]  # a* = 0, b* free
    assert lift_space(FFRep.simple(K, 0, 3)).dim == 0
    assert lift_space(FFRep.zero(K, (1, 1), 3)).dim == 2


def test_nilpotent_lift_examples(K):
    X = FFRep.from_dict(K, (1, 1), 3, {"a": [[1]]})
    assert nilpotent_lifts(X).count == 1
    for p in (2, 3, 5):
        assert nilpotent_lifts(FFRep.zero(K, (1, 1), p)).count == p * p
    assert nilpotent_lifts(FFRep.simple(K, 1, 3)).count == 1


@pytest.mark.parametrize(
    "make, dim, p",
    [(kronecker, (1, 1), 2), (kronecker, (1, 1), 3), (kronecker, (2, 2), 2), (kronecker, (2, 2), 3), (kronecker, (2, 1), 3), (a2_tilde, (1, 1, 1), 3)],
)
def test_fiber_dimension_law(make, dim, p):
    q = make()
    for X in class_table(q, dim, p).representatives():
        assert lift_space(X).dim == hom_dim(X, X) - tits_form(q, X.dim)


@pytest.mark.parametrize("p", [2, 3])
def test_regular_stable_lift_uniquely(p):
    K = kronecker()
    lam = regular_weight(K)
    for X, _ in iso_classes(K, (1, 1), p):
        if stability_status(X, lam).status == STABLE:
            res = nilpotent_lifts(X)
            assert res.count == 1 and is_rho_fixed(res.lifts[0])


def _pi_reps(q, dim, p):
    for X in enumerate_reps(doubled(q).quiver, dim, p):
        x = DoubleRep(q, X)
        if is_pi_rep(x):
            yield x


@pytest.mark.parametrize("make, dim, p", [(kronecker, (1, 1), 3), (kronecker, (2, 1), 2), (a2_tilde, (1, 1, 1), 2)])
def test_rho_fixed_closure_and_short_exact_transport(make, dim, p):
    q = make()
    for x in _pi_reps(q, dim, p):
        fixed = is_rho_fixed(x)
        for beta in np.ndindex(*(d + 1 for d in dim)):
            for W in enumerate_subreps(x.rep, beta):
                S, Q = sub_and_quotient(x.rep, W)
                s, qq = DoubleRep(q, S), DoubleRep(q, Q)
                if fixed:
                    assert is_rho_fixed(s) and is_rho_fixed(qq)
                if is_rho_fixed(s) and is_rho_fixed(qq):
                    # the same subspaces give a subrep of rho(x) with the same ends
                    S2, Q2 = sub_and_quotient(rho(x), W)
                    assert S2 == rho(s) and Q2 == rho(qq)


@pytest.mark.parametrize("make, dim, p", [(kronecker, (1, 1), 3), (kronecker, (2, 1), 2)])
def test_hall_multiplicity_transport(make, dim, p):
    q = make()
    for x in _pi_reps(q, dim, p):
        for beta in np.ndindex(*(d + 1 for d in dim)):
            gamma = tuple(d - b for d, b in zip(dim, beta))
            for X in class_table(q, beta, p).representatives():
                for Y in class_table(q, gamma, p).representatives():
                    Xd = DoubleRep.from_parts(X).rep
                    Yd = DoubleRep.from_parts(Y).rep
                    assert hall_number(Xd, Yd, x.rep) <= hall_number(X, Y, rho(x))


def _key(W):
    return tuple(tuple(map(tuple, w.tolist())) for w in W)


def test_composition_series_transport(K):
    for x in _pi_reps(K, (1, 1), 3):
        if not is_nilpotent(x):
            continue
        # a simple flag: one-dimensional subreps of the double representation
        for beta in [(1, 0), (0, 1)]:
            plain = {_key(W) for W in enumerate_subreps(rho(x), beta)}
            for W in enumerate_subreps(x.rep, beta):
                assert _key(W) in plain


@pytest.mark.parametrize("dim, p", [((1, 1), 2), ((1, 1), 3), ((2, 2), 2)])
def test_stability_transport(dim, p):
    K = kronecker()
    theta = regular_weight(K).theta
    for X in class_table(K, dim, p).representatives():
        plain = stability_status(X, theta).status
        doubled_status = stability_status(DoubleRep.from_parts(X).rep, theta).status
        assert plain == doubled_status
