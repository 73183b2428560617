from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympvoa.affine import (
    TruncatedVerma,
    _add_into,
    build_singular_vector,
    evaluate_module_criterion,
    singular_check,
    singular_vector_weight,
)
from sympvoa.cartan import AffineWeight, lambda_n
from sympvoa.weights import enumerate_S

H = Fraction(1, 2)
LEVEL = H  # n = 2
V = TruncatedVerma(LEVEL, 8)


def _commutator_holds(space, x, y, m, k, mono, level) -> bool:
    v = {mono: 1}
    lhs = space.apply(x, m, space.apply(y, k, v))
    _add_into(lhs, space.apply(y, k, space.apply(x, m, v)), -1)
    rhs = space.apply_combo(space.sp.bracket(x, y), m + k, v)
    if m + k == 0 and space.sp.form[x][y]:
        _add_into(rhs, v, m * space.sp.form[x][y] * level)
    return lhs == rhs


def test_commutator_exhaustive_low_degree():
    states = [s for d in range(3) for s in V.basis(d)]
    for x in range(V.sp.dim):
        for y in range(V.sp.dim):
            for m in range(-2, 3):
                for k in range(-2, 3):
                    for s in states:
                        assert _commutator_holds(V, x, y, m, k, s, LEVEL)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 9), st.integers(0, 9), st.integers(-2, 2), st.integers(-2, 2), st.integers(3, 4), st.data())
def test_commutator_sampled(x, y, m, k, degree, data):
    s = data.draw(st.sampled_from(V.basis(degree)))
    assert _commutator_holds(V, x, y, m, k, s, LEVEL)


def test_central_term_is_needed():
    sp = V.sp
    x, y = sp.eps(2, 0), sp.eps(-2, 0)
    mono = V.basis(1)[0]
    assert _commutator_holds(V, x, y, 1, -1, mono, LEVEL)
    assert not _commutator_holds(V, x, y, 1, -1, mono, LEVEL + 1)


def test_top_vector_is_annihilated():
    for g in range(V.sp.dim):
        assert V.apply(g, 0, V.top) == {}
        assert V.apply(g, 1, V.top) == {}


def test_singular_vector_n1_expansion():
    space, v = build_singular_vector(1)
    sp = space.sp
    e, x1, x2 = sp.eps(1, 1), sp.eps(2, 0), sp.eps(0, 2)
    assert v == {((1, e), (1, e)): 1, tuple(sorted([(1, x1), (1, x2)])): -1}


def test_singular_vector_n2_term_count():
    _, v = build_singular_vector(2)
    assert len(v) == 3


def test_truncation_guard():
    with pytest.raises(ValueError):
        build_singular_vector(2, max_degree=3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_singular_weight(n):
    space, v = build_singular_vector(n)
    w = singular_vector_weight(space, v, n)
    expected = lambda_n(n, 2) + AffineWeight.from_finite(0, (2 * n, 2 * n))
    assert w == expected and w.delta == -2 * n


@pytest.mark.parametrize("n", [1, 2])
def test_singular(n):
    assert singular_check(n).ok
    rep = singular_check(n, perturb=H)
    assert not rep.ok
    assert [c["zero"] for c in rep.checks] == [True, True, False]


def test_n1_at_level_zero_fails():
    rep = singular_check(1, perturb=H)
    assert rep.level == 0 and not rep.ok


def test_module_criterion():
    assert evaluate_module_criterion(AffineWeight((-H, 0, 0)), 1)
    for n in (1, 2, 3):
        assert evaluate_module_criterion(lambda_n(n, 2), n)
    with pytest.raises(ValueError):
        evaluate_module_criterion(AffineWeight((1, -H, 0)), 1)
    assert not evaluate_module_criterion(AffineWeight((1, -3 * H, 0)), 1)


@pytest.mark.parametrize("n", [1, 2])
def test_module_criterion_engine_source(n):
    for i in (1, 2):
        for lam in enumerate_S(i, n, 2):
            assert evaluate_module_criterion(lam, n, source="uea")
