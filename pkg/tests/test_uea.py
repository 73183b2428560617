import random
from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_q
from sympvoa.exact import MultiPoly, falling_product
from sympvoa.uea import (
    UEAElement,
    adjoint_module_zero_weight,
    adjoint_power,
    adjoint_word,
    compute_p,
    engine,
    hc_project,
    module_dimension,
    relation_vector,
)
from sympvoa.zeros import closed_form, lemma55_set

ENG = engine(2)
SP = ENG.sp
h1, h2 = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)


def X(*eps):
    return UEAElement.gen(ENG, SP.eps(*eps))


def U(p):
    return UEAElement.from_poly(ENG, p)


ONE = UEAElement.one(ENG)
PARAMS = range(0, 4)


def test_basis_order():
    names = [SP.name(k) for k in range(SP.dim)]
    assert names[-1] == "X[e1+e2]"
    assert all(SP.is_negative(k) for k in range(4))
    assert [SP.name(k) for k in SP.cartan] == ["h1", "h2"]


def test_multiply_examples():
    a, b = X(2, 0), X(-2, 0)
    assert a * b == b * a - 4 * U(h1)
    assert U(h1) * X(1, 1) == X(1, 1) * U(h1 + 1)
    f = X(1, -1) * X(-1, -1) + U(h2)
    assert f * ONE == f and ONE * f == f


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9))
def test_jacobi(i, j, k):
    a, b, c = (UEAElement.gen(ENG, g) for g in (i, j, k))
    total = a.bracket(b.bracket(c)) + b.bracket(c.bracket(a)) + c.bracket(a.bracket(b))
    assert not total


def test_associativity_on_random_words():
    rng = random.Random(7)
    for _ in range(40):
        a, b, c = (
            UEAElement(ENG, {ENG.mono(*sorted(rng.sample(range(10), 2))): rng.randint(-3, 3)})
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)


# --- the identities used to derive the polynomials ---------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_item1(n):
    for k in range(n + 1):
        lhs = adjoint_power(SP.eps(2, 0), k, X(-2, 0) ** n).mod_nplus()
        c = (-1) ** k * 4**k * factorial(n) // factorial(n - k)
        rhs = X(-2, 0) ** (n - k) * U(falling_product(h1 - n + k, k, -1) * c)
        assert lhs == rhs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_items2_3_hc(n):
    c = (-1) ** n * 4**n * factorial(n)
    assert hc_project(adjoint_power(SP.eps(2, 0), n, X(-2, 0) ** n)) == falling_product(h1, n, -1) * c
    assert hc_project(adjoint_power(SP.eps(0, 2), n, X(0, -2) ** n)) == falling_product(h2, n, -1) * c


def test_items2_3_examples():
    assert hc_project(X(-2, 0).ad(SP.eps(2, 0))) == -4 * h1
    assert hc_project(adjoint_power(SP.eps(0, 2), 2, X(0, -2) ** 2)) == 32 * h2 * (h2 - 1)
    assert hc_project(U(h1 * h2)) == h1 * h2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_item4(m):
    lhs = adjoint_power(SP.eps(1, 1), m, X(-1, -1) ** m).mod_nplus()
    assert lhs == U(falling_product(h1 + h2, m, -1) * ((-1) ** m * factorial(m)))


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_item5(m):
    e = SP.eps(1, 1)
    for mp in range(m + 1, 4):
        assert adjoint_power(e, mp, X(-1, -1) ** m).in_left_ideal_of(e)


def test_item6():
    for r, k in product(range(1, 4), PARAMS):
        assert not adjoint_power(SP.eps(1, 1), r, X(0, -2) ** k).mod_nplus()


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_items7_8(k):
    e = SP.eps(1, 1)
    assert adjoint_power(e, 2 * k, X(-2, 0) ** k) == X(0, 2) ** k * factorial(2 * k)
    for i in (1, 2, 3):
        assert not adjoint_power(e, 2 * k + i, X(-2, 0) ** k)


def test_item9():
    rng = random.Random(3)
    for root in SP.root_system.roots:
        for k in PARAMS:
            p = MultiPoly(
                {(rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)},
                2,
            )
            xa = UEAElement.gen(ENG, SP.root(root)) ** k
            assert U(p) * xa == xa * U(p.shift((k * root[0], k * root[1])))


def _commuting_products(sign):
    gens = [SP.eps(2 * sign, 0), SP.eps(0, 2 * sign), SP.eps(sign, sign)]
    for exps in product(range(3), repeat=3):
        if 0 < sum(exps) <= 3:
            word = [g for g, e in zip(gens, exps) for _ in range(e)]
            w = (sign * (2 * exps[0] + exps[2]), sign * (2 * exps[1] + exps[2]))
            yield word, w


def _prod(word):
    out = ONE
    for g in word:
        out = out * UEAElement.gen(ENG, g)
    return out


def _ad_word(word, f):
    return adjoint_word([(g, 1) for g in word], f)


def test_leading_terms_of_commuting_products():
    cases = 0
    for fw, wf in _commuting_products(1):
        for gw, wg in _commuting_products(-1):
            if (wf[0] + wg[0], wf[1] + wg[1]) != (0, 0):
                continue
            f, g = _prod(fw), _prod(gw)
            assert _ad_word(fw, g).mod_nplus() == (f * g).mod_nplus()
            assert _ad_word(gw, f).mod_nplus() == ((-1) ** len(gw) * (f * g)).mod_nplus()
            cases += 1
    assert cases >= 10


# --- projection and the polynomials -------------------------------------------

def test_hc_project_rejects_nonzero_weight():
    with pytest.raises(ValueError):
        hc_project(X(2, 0))


@pytest.mark.parametrize("index", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2])
def test_compute_p_proportional(index, n):
    p = compute_p(index, n, check_closed_form=True)
    assert p.ratio_to(closed_form(index, n)) not in (None, 0)


def test_compute_p_small_cases():
    assert compute_p(1, 1).ratio_to((h1 - h2) * (h1 - h2 - 1)) is not None
    assert compute_p(2, 1).ratio_to((h1 + Fraction(1, 2)) * h2) is not None
    assert compute_p(3, 1).ratio_to(4 * h2 + (h1 + h2) * (h1 + h2 - 1)) is not None


def test_relation_vector_weight():
    assert relation_vector(2).weights() == {(4, 4)}
    assert relation_vector(1, lowest=True).weights() == {(-2, -2)}


def test_adjoint_module_n1():
    basis = adjoint_module_zero_weight(1)
    assert module_dimension(1) == 14
    pts = lemma55_set(1).points
    assert all(p(pt) == 0 for p in basis for pt in pts)
    from sympvoa.exact import RationalSpan

    span = RationalSpan()
    for b in basis:
        span.add(b.terms)
    for i in (1, 2, 3):
        assert compute_p(i, 1).terms in span


@given(st.lists(small_q, min_size=2, max_size=2))
def test_projection_is_linear_on_cartan(c):
    p = c[0] * h1 * h1 + c[1] * h2
    assert hc_project(U(p)) == p
