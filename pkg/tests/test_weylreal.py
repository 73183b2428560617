from fractions import Fraction

import pytest

from sympvoa.weylreal import WeylElement, WeylQuadratic, realize_sp, sp_algebra


@pytest.mark.parametrize("ell", [2, 3])
def test_realization_size_and_closure(ell):
    sp = sp_algebra(ell)
    assert sp.dim == 2 * ell * ell + ell
    quads = realize_sp(ell)
    labels = list(quads)
    for a in labels[:8]:
        for b in labels:
            assert isinstance(quads[a].bracket(quads[b]), WeylQuadratic)


def test_weyl_relation():
    a1, s1, s2 = (WeylElement.gen(2, lab) for lab in (("a", 0), ("s", 0), ("s", 1)))
    assert a1.bracket(s1) == WeylElement.scalar(2, 1)
    assert not a1.bracket(s2)


def test_bracket_examples():
    sp = sp_algebra(2)
    assert sp.bracket(sp.eps(2, 0), sp.eps(-2, 0)) == {sp.h(1): -4}
    assert sp.bracket(sp.h(1), sp.eps(1, 1)) == {sp.eps(1, 1): 1}
    assert sp.bracket(sp.h(2), sp.eps(1, 1)) == {sp.eps(1, 1): 1}
    # frozen regression constant
    assert sp.bracket(sp.eps(1, -1), sp.eps(1, 1)) == {sp.eps(2, 0): -1}


def test_weight_vectors():
    sp = sp_algebra(3)
    for k in list(sp.n_minus) + list(sp.n_plus):
        for i in range(1, 4):
            w = sp.weights[k][i - 1]
            assert sp.bracket(sp.h(i), k) == ({k: w} if w else {})


def test_invariant_form():
    sp = sp_algebra(2)
    assert sp.form[sp.h(1)][sp.h(1)] == 2
    assert sp.form[sp.eps(2, 0)][sp.eps(-2, 0)] == -4
    assert sp.form[sp.eps(1, 1)][sp.eps(-1, -1)] == -2
    assert sp.form[sp.eps(1, -1)][sp.eps(-1, 1)] == 2
    # invariance: ([x,y]|z) = (x|[y,z])
    for x in range(sp.dim):
        for y in range(sp.dim):
            for z in range(sp.dim):
                left = sum((c * sp.form[k][z] for k, c in sp.bracket(x, y).items()), Fraction(0))
                right = sum((c * sp.form[x][k] for k, c in sp.bracket(y, z).items()), Fraction(0))
                assert left == right


def test_from_weyl_rejects_constants():
    with pytest.raises(ValueError):
        WeylQuadratic.from_weyl(WeylElement.scalar(2, 1))
