from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_q
from sympvoa.cartan import (
    AffineWeight,
    build_root_system,
    c_vec,
    check_admissible,
    gamma0_coroot,
    h_vec,
    lambda_n,
    pair,
    pi_1,
    pi_2,
    real_coroots_up_to,
    rho,
    simple_coroots,
)
from sympvoa.weights import enumerate_S

H = Fraction(1, 2)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_root_system_shape(ell):
    rs = build_root_system(ell)
    assert len(rs.roots) == 2 * ell * ell
    assert rs.highest_root == (2,) + (0,) * (ell - 1)
    assert rs.simple_roots[-1] == (0,) * (ell - 1) + (2,)
    assert rs.norm2(rs.highest_root) == 2
    assert all(rs.norm2(r) == (2 if rs.is_long(r) else 1) for r in rs.roots)


def test_root_system_rejects_rank_one():
    with pytest.raises(ValueError):
        build_root_system(1)


def test_pairing_examples():
    ell = 2
    assert pair(lambda_n(1, ell), c_vec(ell)) == -H
    assert pair(lambda_n(3, ell), c_vec(ell)) == Fraction(3, 2)
    assert pair(AffineWeight.fundamental(ell, 1), simple_coroots(ell)[1]) == 1
    assert pair(rho(3), c_vec(3)) == 4


@given(small_q, small_q, st.lists(small_q, min_size=3, max_size=3), st.lists(small_q, min_size=3, max_size=3))
def test_pair_bilinear(a, b, lam, mu):
    lam, mu = AffineWeight(tuple(lam)), AffineWeight(tuple(mu))
    for x in list(simple_coroots(2)) + [c_vec(2), h_vec(2, 1)]:
        assert pair(a * lam + b * mu, x) == a * pair(lam, x) + b * pair(mu, x)


def test_finite_part_round_trip():
    lam = AffineWeight((Fraction(-5, 2), 3, 1, 2))
    assert lam.finite_part == (6, 3, 2)
    assert AffineWeight.from_finite(lam.level, lam.finite_part) == lam
    assert [pair(lam, h_vec(3, j)) for j in (1, 2, 3)] == list(lam.finite_part)


def test_delta_ignored_by_equality():
    a = AffineWeight((1, 0, 0), delta=3)
    assert a == AffineWeight((1, 0, 0))
    assert AffineWeight.from_json(a.to_json()).delta == 3


def test_coroot_enumeration():
    assert gamma0_coroot(2) == (2, 1, 0)
    finite = [r for r in real_coroots_up_to(2, 3) if r.m == 0]
    assert len(finite) == 4
    assert len(real_coroots_up_to(2, 1)) == 12
    assert all(min(r.vector) >= 0 for r in real_coroots_up_to(3, 4))


def test_pi_sets():
    assert pi_1(2) == {(2, 1, 0), (0, 1, 0), (0, 0, 1)}
    assert pi_2(2) == {(1, 0, 0), (0, 1, 0), (0, 1, 2)}


def test_admissibility_examples():
    r = check_admissible(AffineWeight((-H, 0, 0)))
    assert r.admissible and r.pi_lambda == pi_1(2)
    r = check_admissible(AffineWeight((1, 0, 0)))
    assert r.cond1 and r.pi_lambda == frozenset(simple_coroots(2))
    r = check_admissible(AffineWeight((Fraction(-3, 2), 0, 0)))
    assert not r.cond1
    assert r.witness == (2, 1, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("ell", [2, 3])
def test_enumerated_weights_admissible(n, ell):
    for i, pi in ((1, pi_1), (2, pi_2)):
        for lam in enumerate_S(i, n, ell):
            assert lam.level == n - Fraction(3, 2)
            r = check_admissible(lam, 2 * n + 2)
            assert r.cond1 and r.cond2
            assert r.pi_lambda == pi(ell)
