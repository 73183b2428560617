"""Weyl algebra W(A) and the quadratic realization of sp_2l.

Generators are ``a_1..a_l`` and ``a*_1..a*_l`` with ``[a_i, a*_j] = delta_ij``;
all other brackets vanish.  Elements of the Weyl algebra are stored in normal
form with every ``a*`` to the left of every ``a``.  The Lie algebra sp_2l is
spanned by the symmetrized products ``:xy: = (xy + yx)/2``:

    X_{e_i - e_j} = :a_i a*_j:,   X_{e_i + e_j} = :a_i a_j:,
    X_{-(e_i + e_j)} = :a*_i a*_j:,   h_i = -:a_i a*_i:

(``X_{2e_i}`` is the ``i = j`` case).  :class:`SpAlgebra` reads its structure
constants and invariant form off this realization, and every other module in
the package takes its Lie algebra from there.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .cartan import build_root_system
from .exact import Q

# Oscillator labels: ("a", i) for a_i, ("s", i) for a*_i, with 0-based i.


class WeylElement:
    """Normal-ordered element of W(A): ``{(star_exps, plain_exps): coeff}``."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms=None):
        self.ell = ell
        self.terms = {k: Q(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def gen(cls, ell: int, label) -> "WeylElement":
        flavor, i = label
        e = tuple(int(k == i) for k in range(ell))
        z = (0,) * ell
        return cls(ell, {(e, z) if flavor == "s" else (z, e): 1})

    @classmethod
    def scalar(cls, ell: int, c) -> "WeylElement":
        z = (0,) * ell
        return cls(ell, {(z, z): c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return WeylElement(self.ell, out)

    def __neg__(self):
        return WeylElement(self.ell, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            c = Q(other)
            return WeylElement(self.ell, {k: v * c for k, v in self.terms.items()})
        out: dict = {}
        for (s1, p1), c1 in self.terms.items():
            for (s2, p2), c2 in other.terms.items():
                # move a^{p1} past a*^{s2}, one index at a time
                partial = [((), (), c1 * c2)]
                for i in range(self.ell):
                    q, r = p1[i], s2[i]
                    nxt = []
                    for ss, pp, c in partial:
                        for j in range(min(q, r) + 1):
                            w = comb(q, j) * comb(r, j) * factorial(j)
                            nxt.append((ss + (r - j,), pp + (q - j,), c * w))
                    partial = nxt
                for ss, pp, c in partial:
                    key = (
                        tuple(a + b for a, b in zip(s1, ss)),
                        tuple(a + b for a, b in zip(pp, p2)),
                    )
                    out[key] = out.get(key, 0) + c
        return WeylElement(self.ell, out)

    __rmul__ = __mul__

    def bracket(self, other: "WeylElement") -> "WeylElement":
        return self * other - other * self

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"WeylElement({self.terms})"


class WeylQuadratic:
    """Rational combination of symmetrized pairs ``:xy:``; keys are sorted label pairs."""

    __slots__ = ("ell", "pairs")

    def __init__(self, ell: int, pairs=None):
        self.ell = ell
        clean: dict = {}
        for (x, y), c in (pairs or {}).items():
            key = tuple(sorted((x, y)))
            clean[key] = clean.get(key, Fraction(0)) + Q(c)
        self.pairs = {k: v for k, v in clean.items() if v}

    def to_weyl(self) -> WeylElement:
        out = WeylElement(self.ell)
        for (x, y), c in self.pairs.items():
            gx, gy = WeylElement.gen(self.ell, x), WeylElement.gen(self.ell, y)
            out = out + (gx * gy + gy * gx) * (c / 2)
        return out

    @classmethod
    def from_weyl(cls, w: WeylElement) -> "WeylQuadratic":
        """Inverse of :meth:`to_weyl`; rejects elements outside the quadratic span."""
        ell = w.ell
        pairs: dict = {}
        const = Fraction(0)
        for (s, p), c in w.terms.items():
            labels = [("s", i) for i in range(ell) for _ in range(s[i])]
            labels += [("a", i) for i in range(ell) for _ in range(p[i])]
            if len(labels) == 0:
                const += c
                continue
            if len(labels) != 2:
                raise ValueError("element is not a symmetrized quadratic")
            x, y = labels
            pairs[(x, y)] = pairs.get((x, y), 0) + c
            if x[0] == "s" and y[0] == "a" and x[1] == y[1]:
                # a*_i a_i = :a_i a*_i: - 1/2
                const -= c / 2
        if const:
            raise ValueError("element has a nonzero constant part")
        return cls(ell, pairs)

    def bracket(self, other: "WeylQuadratic") -> "WeylQuadratic":
        return WeylQuadratic.from_weyl(self.to_weyl().bracket(other.to_weyl()))

    def __add__(self, other):
        out = dict(self.pairs)
        for k, v in other.pairs.items():
            out[k] = out.get(k, 0) + v
        return WeylQuadratic(self.ell, out)

    def __mul__(self, c):
        return WeylQuadratic(self.ell, {k: v * Q(c) for k, v in self.pairs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WeylQuadratic) and self.pairs == other.pairs

    def __repr__(self):
        def lab(x):
            return ("a" if x[0] == "a" else "a*") + str(x[1] + 1)

        return " + ".join(f"{c}:{lab(x)}{lab(y)}:" for (x, y), c in self.pairs.items()) or "0"


def root_label(root) -> tuple:
    return ("e", tuple(root))


def h_label(i: int) -> tuple:
    """Label of ``h_{i+1}`` (0-based index)."""
    return ("h", i)


def realize_sp(ell: int) -> dict:
    """Map every basis label of sp_2l to its :class:`WeylQuadratic`."""
    rs = build_root_system(ell)
    out = {}
    for root in rs.roots:
        pos = [i for i, x in enumerate(root) if x > 0]
        neg = [i for i, x in enumerate(root) if x < 0]
        if sum(abs(x) for x in root) == 2 and max(abs(x) for x in root) == 2:
            i = pos[0] if pos else neg[0]
            fl = "a" if pos else "s"
            pair = ((fl, i), (fl, i))
        elif pos and neg:
            pair = (("a", pos[0]), ("s", neg[0]))
        elif pos:
            pair = (("a", pos[0]), ("a", pos[1]))
        else:
            pair = (("s", neg[0]), ("s", neg[1]))
        out[root_label(root)] = WeylQuadratic(ell, {pair: 1})
    for i in range(ell):
        out[h_label(i)] = WeylQuadratic(ell, {(("a", i), ("s", i)): -1})
    return out


def _positive_block_key(root):
    # e_i - e_j first, then 2e_i, then e_i + e_j, so X_{e_1+e_2} closes the list for l = 2
    kind = 0 if min(root) < 0 else (1 if max(root) == 2 else 2)
    return (kind, tuple(-x for x in root))


class SpAlgebra:
    """sp_2l with the fixed basis, structure constants and normalized invariant form.

    Basis order is ``n_- | h | n_+``; the negative block mirrors the positive one.
    """

    def __init__(self, ell: int):
        self.ell = ell
        rs = build_root_system(ell)
        self.root_system = rs
        pos = sorted(rs.positive_roots, key=_positive_block_key)
        neg = [tuple(-x for x in r) for r in pos]
        self.labels = [root_label(r) for r in neg] + [h_label(i) for i in range(ell)] + [
            root_label(r) for r in pos
        ]
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        self.dim = len(self.labels)
        npos = len(pos)
        self.n_minus = range(0, npos)
        self.cartan = range(npos, npos + ell)
        self.n_plus = range(npos + ell, self.dim)
        self.quadratics = realize_sp(ell)
        self.weights = []
        for lab in self.labels:
            self.weights.append(lab[1] if lab[0] == "e" else (0,) * ell)
        self._decomp = self._decomposition_table()
        self.bracket_table = [[self._bracket(i, j) for j in range(self.dim)] for i in range(self.dim)]
        self.form = self._invariant_form()

    # --- construction helpers -------------------------------------------
    def _decomposition_table(self):
        table = {}
        for k, lab in enumerate(self.labels):
            w = self.quadratics[lab].to_weyl()
            quad = [(key, c) for key, c in w.terms.items() if sum(key[0]) + sum(key[1]) == 2]
            (key, c), = quad
            table[key] = (k, c)
        return table

    def decompose(self, w: WeylElement) -> dict:
        """Coordinates of a Weyl-algebra element in the sp basis."""
        out: dict = {}
        for key, c in w.terms.items():
            if sum(key[0]) + sum(key[1]) != 2:
                continue
            k, ck = self._decomp[key]
            out[k] = out.get(k, 0) + c / ck
        out = {k: v for k, v in out.items() if v}
        recon = WeylElement(self.ell)
        for k, v in out.items():
            recon = recon + self.quadratics[self.labels[k]].to_weyl() * v
        if recon != w:
            raise ValueError("element is not in the span of the sp basis")
        return out

    def _bracket(self, i: int, j: int) -> dict:
        a = self.quadratics[self.labels[i]].to_weyl()
        b = self.quadratics[self.labels[j]].to_weyl()
        return self.decompose(a.bracket(b))

    def ad_matrix(self, i: int) -> list:
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self.bracket_table[i][j].items():
                m[k][j] = c
        return m

    def _invariant_form(self) -> list:
        """Killing form divided by ``2 h^v`` with ``h^v = l + 1``; gives ``(theta|theta) = 2``."""
        ads = [self.ad_matrix(i) for i in range(self.dim)]
        hv = self.ell + 1
        form = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(i, self.dim):
                a, b = ads[i], ads[j]
                tr = sum(
                    (a[r][s] * b[s][r] for r in range(self.dim) for s in range(self.dim) if a[r][s] and b[s][r]),
                    Fraction(0),
                )
                form[i][j] = form[j][i] = tr / (2 * hv)
        return form

    # --- lookups -----------------------------------------------------------
    def root(self, root) -> int:
        return self.index[root_label(root)]

    def h(self, i: int) -> int:
        """Index of ``h_i`` (1-based, matching the usual notation)."""
        return self.index[h_label(i - 1)]

    def eps(self, *coeffs) -> int:
        """Index of the root vector with epsilon coordinates ``coeffs``."""
        return self.root(tuple(coeffs))

    def bracket(self, i: int, j: int) -> dict:
        return self.bracket_table[i][j]

    def name(self, k: int) -> str:
        lab = self.labels[k]
        if lab[0] == "h":
            return f"h{lab[1] + 1}"
        terms = []
        for i, x in enumerate(lab[1]):
            if x:
                sign = "+" if x > 0 else "-"
                coef = "2" if abs(x) == 2 else ""
                terms.append(f"{sign}{coef}e{i + 1}")
        s = "".join(terms)
        return "X[" + (s[1:] if s.startswith("+") else s) + "]"

    def is_positive(self, k: int) -> bool:
        return k in self.n_plus

    def is_negative(self, k: int) -> bool:
        return k in self.n_minus


@lru_cache(maxsize=None)
def sp_algebra(ell: int) -> SpAlgebra:
    return SpAlgebra(ell)
