from fractions import Fraction

import pytest

from sympvoa.cartan import AffineWeight
from sympvoa.weights import contains, enumerate_S, p_plus_1

H = Fraction(1, 2)


def W(*c):
    return AffineWeight(tuple(Fraction(x) for x in c))


def test_p_plus_1():
    assert set(p_plus_1(2)) == {W(1, 0, 0), W(0, 1, 0), W(0, 0, 1)}
    assert len(p_plus_1(3)) == 4
    assert all(w.level == 1 for w in p_plus_1(4))


def test_base_cases():
    assert enumerate_S(1, 1, 2).as_set() == {W(-H, 0, 0), W(-3 * H, 1, 0)}
    assert enumerate_S(2, 1, 2).as_set() == {W(0, 0, -H), W(0, 1, -3 * H)}


def test_second_step_by_hand():
    expected = {
        W(H, 0, 0),
        W(-H, 1, 0),
        W(-H, 0, 1),
        W(-3 * H, 2, 0),
        W(-3 * H, 1, 1),
        W(-5 * H, 3, 0),
    }
    assert enumerate_S(1, 2, 2).as_set() == expected


def test_contains():
    assert contains(enumerate_S(1, 1, 2), W(-H, 0, 0))
    assert not contains(enumerate_S(1, 1, 2), W(1, 0, 0))
    assert contains(enumerate_S(1, 2, 2), W(-5 * H, 3, 0))


@pytest.mark.parametrize("ell", [2, 3])
def test_family_properties(ell):
    sizes = {1: [], 2: []}
    for n in range(1, 5):
        s1, s2 = enumerate_S(1, n, ell), enumerate_S(2, n, ell)
        assert not (s1.as_set() & s2.as_set())
        for ws in (s1, s2):
            assert len(set(ws)) == len(ws)
            assert all(w.level == n - Fraction(3, 2) for w in ws)
        sizes[1].append(len(s1))
        sizes[2].append(len(s2))
    for seq in sizes.values():
        assert seq == sorted(seq)


def test_four_modules_at_minus_half():
    union = enumerate_S(1, 1, 2).as_set() | enumerate_S(2, 1, 2).as_set()
    assert len(union) == 4


def test_csv_columns():
    text = enumerate_S(1, 1, 2).to_csv().splitlines()
    assert text[0] == "L0,L1,L2,level"
    assert text[1:] == ["-3/2,1,0,-1/2", "-1/2,0,0,-1/2"]


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_S(3, 1, 2)
    with pytest.raises(ValueError):
        enumerate_S(1, 0, 2)
