from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_q
from sympvoa.zeros import (
    brute_force_T,
    closed_form,
    lemma55_set,
    lemma56_check,
    tilde_p3,
)

H = Fraction(1, 2)
F = Fraction


def test_n1_sets():
    t = brute_force_T(1)
    assert t.part1 == {(F(0), F(0)), (F(1), F(0))}
    assert t.part2 == {(-H, -H), (-H, -3 * H)}


def test_n1_point_values():
    p1, p2, p3 = (closed_form(i, 1) for i in (1, 2, 3))
    assert p3((0, 0)) == 0 and p3((-H, -3 * H)) == 0
    assert p3((F(2), F(5))) == 4 * 5 + 7 * 6
    assert p1((0, -1)) == 0
    assert p2((0, -1)) == -H
    assert (F(0), F(-1)) not in brute_force_T(1).points


def test_family_membership():
    assert (F(3), F(0)) in lemma55_set(2).part1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_brute_force_matches_families(n):
    assert brute_force_T(n) == lemma55_set(n)


@pytest.mark.parametrize("n", [1, 2])
def test_brute_force_from_engine(n):
    assert brute_force_T(n, "uea") == lemma55_set(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sizes_and_shape(n):
    t = lemma55_set(n)
    assert len(t.part1) == len(t.part2) == n * (n + 1)
    assert not (t.part1 & t.part2)
    for a, b in t.part1:
        assert a.denominator == b.denominator == 1
        assert 0 <= b <= a <= 2 * n - 1 + b
    for a, b in t.part2:
        assert a.denominator == b.denominator == 2


def test_tilde_examples():
    assert tilde_p3(1, 0, 0) == 0
    assert tilde_p3(1, 0, -H) == 0


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 3), st.data(), small_q, st.booleans())
def test_tilde_agrees_with_p3(n, data, s, odd):
    r = data.draw(st.integers(0, n - 1))
    shift = 2 * r + (1 if odd else 0)
    assert tilde_p3(n, r, s, odd) == closed_form(3, n)((s + shift, s))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nonvanishing_on_even_lines(n):
    for r in range(n):
        for s in range(n - r, n):
            assert tilde_p3(n, r, s) != 0
        for i in range(1, r + 1):
            assert tilde_p3(n, r, -r - H - i) != 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_recursion(n):
    assert lemma56_check(n)


def test_recursion_needs_seed():
    assert not lemma56_check(1, drop_seed=True)


def test_bad_inputs():
    with pytest.raises(ValueError):
        lemma55_set(0)
    with pytest.raises(ValueError):
        closed_form(4, 1)


def test_json_shape():
    js = brute_force_T(1).to_json()
    assert js["T1"] == [["0", "0"], ["1", "0"]]
    assert js["T2"] == [["-1/2", "-3/2"], ["-1/2", "-1/2"]]
