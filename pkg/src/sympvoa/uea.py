"""PBW straightening in U(sp_2l), the adjoint action, and projection onto U(h).

PBW monomials are exponent tuples over the basis of :class:`SpAlgebra`, read
left to right in the order ``n_- | h | n_+``.  With that order the left ideal
``U(g) n_+`` is exactly the span of monomials with a nonzero ``n_+`` exponent,
so reducing modulo it is a term filter.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache

from .exact import MultiPoly, Q, RationalSpan
from .weylreal import SpAlgebra, sp_algebra

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _add_into(out: dict, src: dict, c: Fraction) -> None:
    for k, v in src.items():
        x = out.get(k, 0) + c * v
        if x:
            out[k] = x
        else:
            out.pop(k, None)


class PBWEngine:
    """Memoized multiplication of PBW monomials by single generators."""

    def __init__(self, sp: SpAlgebra):
        self.sp = sp
        self.dim = sp.dim
        self._rcache: dict = {}
        self._lcache: dict = {}

    def unit(self) -> tuple:
        return (0,) * self.dim

    def mono(self, *gens: int) -> tuple:
        """Monomial for generators already listed in PBW order."""
        e = [0] * self.dim
        for g in gens:
            e[g] += 1
        return tuple(e)

    def rmul(self, mono: tuple, g: int) -> dict:
        """``mono * X_g`` in PBW form."""
        key = (mono, g)
        hit = self._rcache.get(key)
        if hit is not None:
            return hit
        k = max((i for i, e in enumerate(mono) if e), default=-1)
        if k <= g:
            m = list(mono)
            m[g] += 1
            out = {tuple(m): Fraction(1)}
        else:
            # prefix*X_k^e*X_g = (prefix*X_k^(e-1)*X_g)*X_k + prefix*X_k^(e-1)*[X_k, X_g]
            m = list(mono)
            m[k] -= 1
            head = tuple(m)
            out = {}
            for t, c in self.rmul(head, g).items():
                _add_into(out, self.rmul(t, k), c)
            for idx, c in self.sp.bracket(k, g).items():
                _add_into(out, self.rmul(head, idx), c)
        self._rcache[key] = out
        return out

    def lmul(self, g: int, mono: tuple) -> dict:
        """``X_g * mono`` in PBW form."""
        key = (g, mono)
        hit = self._lcache.get(key)
        if hit is not None:
            return hit
        f = min((i for i, e in enumerate(mono) if e), default=self.dim)
        if g <= f:
            m = list(mono)
            m[g] += 1
            out = {tuple(m): Fraction(1)}
        else:
            # X_g*X_f*rest = X_f*(X_g*rest) + [X_g, X_f]*rest
            m = list(mono)
            m[f] -= 1
            rest = tuple(m)
            out = {}
            for t, c in self.lmul(g, rest).items():
                _add_into(out, self.lmul(f, t), c)
            for idx, c in self.sp.bracket(g, f).items():
                _add_into(out, self.lmul(idx, rest), c)
        self._lcache[key] = out
        return out

    def mul_terms(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for mb, cb in b.items():
            cur = dict(a)
            for g, e in enumerate(mb):
                for _ in range(e):
                    nxt: dict = {}
                    for m, c in cur.items():
                        _add_into(nxt, self.rmul(m, g), c)
                    cur = nxt
            _add_into(out, cur, cb)
        return out


@lru_cache(maxsize=None)
def engine(ell: int = 2) -> PBWEngine:
    return PBWEngine(sp_algebra(ell))


class UEAElement:
    """Rational combination of PBW monomials in U(sp_2l)."""

    __slots__ = ("eng", "terms")

    def __init__(self, eng: PBWEngine, terms: dict | None = None):
        self.eng = eng
        self.terms = {k: Q(v) for k, v in (terms or {}).items() if v}

    # constructors ----------------------------------------------------------
    @classmethod
    def one(cls, eng: PBWEngine) -> "UEAElement":
        return cls(eng, {eng.unit(): 1})

    @classmethod
    def gen(cls, eng: PBWEngine, g: int) -> "UEAElement":
        return cls(eng, {eng.mono(g): 1})

    @classmethod
    def from_poly(cls, eng: PBWEngine, p: MultiPoly) -> "UEAElement":
        """Embed a polynomial in ``h_1..h_l`` into U(h)."""
        sp = eng.sp
        out = {}
        for exp, c in p.terms.items():
            m = [0] * eng.dim
            for i, e in enumerate(exp):
                m[sp.h(i + 1)] = e
            out[tuple(m)] = c
        return cls(eng, out)

    # arithmetic --------------------------------------------------------------
    def __add__(self, other):
        out = dict(self.terms)
        _add_into(out, other.terms, Fraction(1))
        return UEAElement(self.eng, out)

    def __neg__(self):
        return UEAElement(self.eng, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return UEAElement(self.eng, self.eng.mul_terms(self.terms, other.terms))
        c = Q(other)
        return UEAElement(self.eng, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self * c

    def __pow__(self, k: int):
        out = UEAElement.one(self.eng)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def bracket(self, other: "UEAElement") -> "UEAElement":
        return self * other - other * self

    def ad(self, g: int) -> "UEAElement":
        """``[X_g, self]``."""
        eng = self.eng
        out: dict = {}
        for m, c in self.terms.items():
            _add_into(out, eng.lmul(g, m), c)
            _add_into(out, eng.rmul(m, g), -c)
        return UEAElement(eng, out)

    # structure -------------------------------------------------------------
    def weight_of(self, mono: tuple) -> tuple:
        sp = self.eng.sp
        w = [0] * sp.ell
        for g, e in enumerate(mono):
            if e:
                for i, x in enumerate(sp.weights[g]):
                    w[i] += e * x
        return tuple(w)

    def weights(self) -> set:
        return {self.weight_of(m) for m in self.terms}

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def mod_nplus(self) -> "UEAElement":
        """Drop every monomial lying in ``U(g) n_+``."""
        npl = self.eng.sp.n_plus
        return UEAElement(
            self.eng, {m: c for m, c in self.terms.items() if not any(m[g] for g in npl)}
        )

    def in_left_ideal_of(self, g: int) -> bool:
        """Membership in ``U(g) X_g`` when ``X_g`` is last in the PBW order."""
        if g != self.eng.dim - 1:
            raise ValueError("test only valid for the last PBW generator")
        return all(m[g] > 0 for m in self.terms)

    def __repr__(self):
        sp = self.eng.sp
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            factors = [
                sp.name(g) + (f"^{e}" if e > 1 else "") for g, e in enumerate(m) if e
            ]
            parts.append(f"{c}*" + "*".join(factors) if factors else f"{c}")
        return " + ".join(parts)


def adjoint_power(g: int, k: int, f: UEAElement) -> UEAElement:
    """``(ad X_g)^k f``."""
    for _ in range(k):
        f = f.ad(g)
    return f


def adjoint_word(word, f: UEAElement) -> UEAElement:
    """``(a_1 a_2 ... a_r)_L f = ad a_1 (ad a_2 (... ad a_r f))``.

    ``word`` is a sequence of ``(generator, power)`` pairs read left to right.
    """
    for g, k in reversed(list(word)):
        f = adjoint_power(g, k, f)
    return f


def hc_project(f: UEAElement) -> MultiPoly:
    """Pure U(h) part of a weight-zero element modulo ``U(g) n_+``."""
    sp = f.eng.sp
    if any(any(w) for w in f.weights()):
        raise ValueError("hc_project needs a weight-zero element")
    terms = {}
    for m, c in f.terms.items():
        if any(m[g] for g in sp.n_plus):
            continue
        if any(m[g] for g in sp.n_minus):
            raise AssertionError("weight-zero monomial with n_- but no n_+ factor")
        terms[tuple(m[g] for g in sp.cartan)] = c
    return MultiPoly(terms, sp.ell)


# --- the vectors spanning the relation module (rank 2) -----------------------

def relation_vector(n: int, eng: PBWEngine | None = None, lowest: bool = False) -> UEAElement:
    """``(X_{e1+e2}^2 - X_{2e1} X_{2e2})^n``, or its lowest-weight mirror."""
    eng = eng or engine(2)
    sp = eng.sp
    s = -1 if lowest else 1
    e = UEAElement.gen(eng, sp.eps(s, s))
    x1 = UEAElement.gen(eng, sp.eps(2 * s, 0))
    x2 = UEAElement.gen(eng, sp.eps(0, 2 * s))
    return (e * e - x1 * x2) ** n


@lru_cache(maxsize=None)
def compute_p_raw(index: int, n: int) -> MultiPoly:
    """Projection of the adjoint expression defining ``p_index`` (unnormalized)."""
    eng = engine(2)
    sp = eng.sp
    if index == 1:
        f = adjoint_word([(sp.eps(1, -1), 2 * n), (sp.eps(-2, 0), 2 * n)], relation_vector(n, eng))
    elif index == 2:
        f = adjoint_word([(sp.eps(-2, 0), n), (sp.eps(0, -2), n)], relation_vector(n, eng))
    elif index == 3:
        f = adjoint_word([(sp.eps(1, 1), 2 * n)], relation_vector(n, eng, lowest=True))
    else:
        raise ValueError("index must be 1, 2 or 3")
    p = hc_project(f)
    if not p:
        raise ArithmeticError(f"p_{index} projected to zero for n={n}")
    return p


def compute_p(index: int, n: int, check_closed_form: bool = False) -> MultiPoly:
    """Monic ``p_index`` for the rank-2 relation of degree ``2n``."""
    p = compute_p_raw(index, n).monic()
    if check_closed_form:
        from .zeros import closed_form

        if p.ratio_to(closed_form(index, n)) is None:
            raise AssertionError(f"p_{index}(n={n}) is not proportional to its closed form")
    return p


@lru_cache(maxsize=None)
def _adjoint_closure(n: int, cap: int) -> tuple:
    """Vectors spanning ``W = U(g)_L (relation vector)``, one new direction each."""
    eng = engine(2)
    sp = eng.sp
    start = relation_vector(n, eng)
    spans: dict = {}
    (w0,) = start.weights()
    spans.setdefault(w0, RationalSpan()).add(start.terms)
    found = [start]
    queue = [start]
    roots = list(sp.n_minus) + list(sp.n_plus)
    while queue:
        v = queue.pop()
        for g in roots:
            u = v.ad(g)
            if not u:
                continue
            (wt,) = u.weights()
            if spans.setdefault(wt, RationalSpan()).add(u.terms):
                found.append(u)
                queue.append(u)
                if len(found) > cap:
                    raise RuntimeError("adjoint closure exceeded cap")
    return tuple(found)


def adjoint_module_zero_weight(n: int, cap: int = 5000) -> list:
    """Basis of ``{hc_project(u) : u in W_0}``.

    ``cap`` bounds the number of independent vectors collected for ``W``.
    """
    ell = engine(2).sp.ell
    zero = (0,) * ell
    polys = RationalSpan()
    for u in _adjoint_closure(n, cap):
        if u.weights() == {zero}:
            polys.add(hc_project(u).terms)
    return [MultiPoly(row, ell) for row in polys.basis()]


def module_dimension(n: int, cap: int = 5000) -> int:
    """Dimension of the adjoint module generated by the relation vector."""
    return len(_adjoint_closure(n, cap))
