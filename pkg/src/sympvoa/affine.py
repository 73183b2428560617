"""Degree-truncated generalized Verma module N(k Lambda_0) over affine sp_2l.

A state is a combination of ordered products of negative modes ``X(-j)``
(``j >= 1``) applied to the top vector, which every zero mode of sp_2l and
every positive mode annihilates; ``c`` acts by the level ``k``.  Modes act by
commuting them rightwards with

    [X(m), Y(p)] = [X, Y](m + p) + m delta_{m+p,0} (X|Y) k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import AffineWeight, lambda_n
from .exact import Q, Scalar, fmt_q
from .weylreal import SpAlgebra, sp_algebra
from .zeros import polynomials


def _add_into(out: dict, src: dict, c) -> None:
    for k, v in src.items():
        x = out.get(k, 0) + (v if c == 1 else c * v)
        if x:
            out[k] = x
        else:
            out.pop(k, None)


class TruncatedVerma:
    """N(k Lambda_0) cut off at total t-degree ``max_degree``.

    Monomials are sorted tuples of ``(j, g)`` meaning ``X_g(-j)``.
    """

    def __init__(self, level: Scalar, max_degree: int, ell: int = 2):
        self.sp: SpAlgebra = sp_algebra(ell)
        self.level = Q(level)
        self.max_degree = max_degree
        self._apply_cache: dict = {}
        self._insert_cache: dict = {}

    @staticmethod
    def degree(mono: tuple) -> int:
        return sum(j for j, _ in mono)

    def _insert(self, g: int, j: int, mono: tuple) -> dict:
        """``X_g(-j) * mono`` rewritten in sorted order."""
        if self.degree(mono) + j > self.max_degree:
            return {}
        key = (g, j, mono)
        hit = self._insert_cache.get(key)
        if hit is not None:
            return hit
        if not mono or (j, g) <= mono[0]:
            out = {((j, g),) + mono: 1}
        else:
            (jf, f), rest = mono[0], mono[1:]
            out = {}
            for t, c in self._insert(g, j, rest).items():
                _add_into(out, self._insert(f, jf, t), c)
            for h, c in self.sp.bracket(g, f).items():
                _add_into(out, self._insert(h, j + jf, rest), c)
        self._insert_cache[key] = out
        return out

    def _apply_mono(self, g: int, m: int, mono: tuple) -> dict:
        if m < 0:
            return self._insert(g, -m, mono)
        if not mono:
            return {}
        key = (g, m, mono)
        hit = self._apply_cache.get(key)
        if hit is not None:
            return hit
        (jf, f), rest = mono[0], mono[1:]
        out: dict = {}
        for t, c in self._apply_mono(g, m, rest).items():
            _add_into(out, self._insert(f, jf, t), c)
        for h, c in self.sp.bracket(g, f).items():
            _add_into(out, self._apply_mono(h, m - jf, rest), c)
        if m == jf:
            central = m * self.sp.form[g][f] * self.level
            if central:
                _add_into(out, {rest: 1}, central)
        self._apply_cache[key] = out
        return out

    def apply(self, g: int, m: int, vec: dict) -> dict:
        """Apply ``X_g(m)`` to a state."""
        out: dict = {}
        for mono, c in vec.items():
            _add_into(out, self._apply_mono(g, m, mono), c)
        return out

    def apply_combo(self, coeffs: dict, m: int, vec: dict) -> dict:
        out: dict = {}
        for g, c in coeffs.items():
            _add_into(out, self.apply(g, m, vec), c)
        return out

    @property
    def top(self) -> dict:
        return {(): 1}

    def weight_of(self, mono: tuple) -> tuple:
        """``(finite epsilon weight, t-degree)`` of a monomial."""
        w = [0] * self.sp.ell
        for _, g in mono:
            for i, x in enumerate(self.sp.weights[g]):
                w[i] += x
        return tuple(w), self.degree(mono)

    def basis(self, degree: int) -> list:
        """All sorted monomials of exact t-degree ``degree``."""
        gens = [(j, g) for j in range(1, degree + 1) for g in range(self.sp.dim)]
        gens.sort()
        out = []

        def rec(start, mono, d):
            if d == degree:
                out.append(tuple(mono))
                return
            for idx in range(start, len(gens)):
                j, g = gens[idx]
                if d + j <= degree:
                    rec(idx, mono + [(j, g)], d + j)

        rec(0, [], 0)
        return out


def _relation_operator(space: TruncatedVerma, vec: dict) -> dict:
    sp = space.sp
    pad = [0] * (sp.ell - 2)
    e = sp.eps(1, 1, *pad)
    x1 = sp.eps(2, 0, *pad)
    x2 = sp.eps(0, 2, *pad)
    out = space.apply(e, -1, space.apply(e, -1, vec))
    _add_into(out, space.apply(x1, -1, space.apply(x2, -1, vec)), -1)
    return out


def build_singular_vector(n: int, max_degree: int | None = None, level: Scalar | None = None, ell: int = 2):
    """``(X_{e1+e2}(-1)^2 - X_{2e1}(-1) X_{2e2}(-1))^n`` applied to the top vector.

    Returns ``(space, state)``.
    """
    if max_degree is None:
        max_degree = 2 * n + 1
    if max_degree < 2 * n:
        raise ValueError("truncation degree must be at least 2n")
    if level is None:
        level = Fraction(2 * n - 3, 2)
    space = TruncatedVerma(level, max_degree, ell)
    vec = space.top
    for _ in range(n):
        vec = _relation_operator(space, vec)
    return space, vec


def singular_vector_weight(space: TruncatedVerma, vec: dict, n: int) -> AffineWeight:
    """Affine weight of a homogeneous state of N((n - 3/2) Lambda_0)."""
    weights = {space.weight_of(m) for m in vec}
    if len(weights) != 1:
        raise ValueError("state is not homogeneous")
    (fin, deg), = weights
    return lambda_n(n, space.sp.ell) + AffineWeight.from_finite(0, fin, delta=-deg)


@dataclass
class SingularReport:
    n: int
    level: Fraction
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["zero"] for c in self.checks)

    def to_json(self) -> dict:
        return {"n": self.n, "level": fmt_q(self.level), "ok": self.ok, "checks": self.checks}


def singular_check(n: int, perturb: Scalar = 0, ell: int = 2) -> SingularReport:
    """Apply the affine raising operators ``X_{alpha_i}(0)`` and ``X_{-theta}(1)`` to ``v_n``."""
    level = Fraction(2 * n - 3, 2) + Q(perturb)
    space, vec = build_singular_vector(n, level=level, ell=ell)
    sp = space.sp
    report = SingularReport(n, level)
    raising = [(sp.root(r), 0) for r in sp.root_system.simple_roots]
    raising.append((sp.root(tuple(-x for x in sp.root_system.highest_root)), 1))
    for g, m in raising:
        image = space.apply(g, m, vec)
        report.checks.append(
            {"op": f"{sp.name(g)}({m})", "zero": not image, "image_terms": len(image)}
        )
    return report


def evaluate_module_criterion(lam: AffineWeight, n: int, source: str = "closed-form") -> bool:
    """True iff p_1, p_2, p_3 vanish on every adjacent pair of the finite part."""
    if lam.level != Fraction(2 * n - 3, 2):
        raise ValueError(f"weight has level {fmt_q(lam.level)}, expected {fmt_q(Fraction(2 * n - 3, 2))}")
    fin = lam.finite_part
    ps = polynomials(n, source)
    return all(p((fin[j], fin[j + 1])) == 0 for j in range(len(fin) - 1) for p in ps)
