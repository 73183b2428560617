"""Exact rational scalars, generalized binomials and sparse multivariate polynomials.

Every number in the package is a :class:`fractions.Fraction`; nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def fmt_q(x: Scalar) -> str:
    """Serialize a rational as ``"a/b"`` (``"a"`` when the denominator is 1)."""
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def binom(x: Scalar, k: int) -> Fraction:
    """Generalized binomial ``x(x-1)...(x-k+1)/k!`` with rational upper argument."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Q(x)
    num = Fraction(1)
    den = 1
    for i in range(k):
        num *= x - i
        den *= i + 1
    return num / den


def falling_product(start, count: int, step: Scalar = -1):
    """Product of ``count`` factors ``start, start+step, start+2*step, ...``.

    ``start`` may be a scalar or a :class:`MultiPoly`; an empty product is 1.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    step = Q(step)
    if isinstance(start, MultiPoly):
        out = MultiPoly.constant(1, start.nvars)
    else:
        start = Q(start)
        out = Fraction(1)
    for i in range(count):
        out = out * (start + i * step)
    return out


def alternating_binom_sum(q: "MultiPoly", n: int) -> Fraction:
    """Return ``sum_{k=0}^n (-1)^k C(n,k) q(k)`` for univariate ``q``."""
    if q.nvars != 1:
        raise ValueError("q must be univariate")
    total = Fraction(0)
    for k in range(n + 1):
        total += (-1) ** k * binom(n, k) * q((k,))
    return total


class MultiPoly:
    """Sparse polynomial in ``nvars`` commuting variables over the rationals.

    Terms are stored as ``{exponent tuple: Fraction}`` with zero coefficients
    dropped, so two polynomials are equal exactly when their term dicts are.
    Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean: dict[tuple, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            if any(e < 0 for e in exp):
                raise ValueError("exponents must be nonnegative")
            c = Q(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        """The ``i``-th variable, counting from 0."""
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars)

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(Q(other), self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Q(other)
            if not c:
                return MultiPoly._raw({}, self.nvars)
            return MultiPoly._raw({e: v * c for e, v in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPoly._raw(out, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Q(c)
        return MultiPoly._raw({e: v / c for e, v in self.terms.items()}, self.nvars)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # evaluation & structure --------------------------------------------
    def __call__(self, point: Iterable[Scalar]) -> Fraction:
        pt = [Q(x) for x in point]
        if len(pt) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(pt, exp):
                if e:
                    v *= x**e
            total += v
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> tuple[tuple, Fraction]:
        """Leading term in graded-lexicographic order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    def monic(self) -> "MultiPoly":
        return self / self.leading()[1]

    def ratio_to(self, other: "MultiPoly") -> Fraction | None:
        """Return ``c`` with ``self == c * other``, or None if not proportional."""
        if not other:
            return None if self else Fraction(0)
        exp, c_other = other.leading()
        c = self.terms.get(exp, Fraction(0)) / c_other
        if c and self == other * c:
            return c
        return None

    def compose(self, images: list["MultiPoly"]) -> "MultiPoly":
        """Substitute ``images[i]`` for variable ``i``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        m = images[0].nvars
        out = MultiPoly._raw({}, m)
        for exp, c in self.terms.items():
            t = MultiPoly.constant(c, m)
            for img, e in zip(images, exp):
                if e:
                    t = t * img**e
            out = out + t
        return out

    def shift(self, offsets: Iterable[Scalar]) -> "MultiPoly":
        """Return ``p(x + offsets)``."""
        offs = [Q(o) for o in offsets]
        return self.compose([MultiPoly.variable(i, self.nvars) + o for i, o in enumerate(offs)])

    def to_json(self) -> list:
        return [[list(e), fmt_q(c)] for e, c in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0]), reverse=False):
            mono = "*".join(
                (f"h{i + 1}" if e == 1 else f"h{i + 1}^{e}") for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(fmt_q(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{fmt_q(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class RationalSpan:
    """Incrementally maintained reduced row-echelon basis of sparse rational vectors.

    Vectors are dicts ``{key: Fraction}``; keys only need to be hashable and
    sortable.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot key -> row with coefficient 1 at the pivot

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Q(c) for k, c in vec.items() if c}
        for piv, row in self.rows.items():
            c = v.get(piv)
            if c:
                for k, r in row.items():
                    x = v.get(k, 0) - c * r
                    if x:
                        v[k] = x
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        inv = 1 / v[piv]
        v = {k: c * inv for k, c in v.items()}
        for p, row in self.rows.items():
            c = row.get(piv)
            if c:
                for k, r in v.items():
                    x = row.get(k, 0) - c * r
                    if x:
                        row[k] = x
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True

    def __contains__(self, vec) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]
