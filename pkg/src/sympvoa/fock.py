"""Oscillator Fock modules for the affine currents at level -1/2.

Mode operators ``a_i(r)``, ``a*_i(r)`` satisfy ``[a_i(r), a*_j(s)] = delta_ij delta_{r+s,0}``
with ``r`` in ``Z + 1/2`` (``moding="half"``) or ``Z`` (``moding="int"``).  A
Fock state is a polynomial in the creation operators applied to the vacuum:
negative modes, plus ``a*_i(0)`` for integer moding.  Annihilators act as
(signed) partial derivatives.

The current of ``X = sum c :xy:`` is ``X(m) = sum_r c N[x(r) y(m-r)]`` where
``N`` moves annihilators to the right; for integer moding the pair of zero
modes keeps the symmetric ordering ``(xy + yx)/2`` of the finite realization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cartan import AffineWeight
from .exact import fmt_q
from .weylreal import SpAlgebra, sp_algebra

HALF = Fraction(1, 2)
LEVEL = Fraction(-1, 2)
SECTORS = ("int-even", "int-odd", "half-even", "half-odd")


def _add_into(out: dict, src: dict, c) -> None:
    for k, v in src.items():
        x = out.get(k, 0) + (v if c == 1 else c * v)
        if x:
            out[k] = x
        else:
            out.pop(k, None)


def _mono_mul(mono: tuple, var: tuple) -> tuple:
    d = dict(mono)
    d[var] = d.get(var, 0) + 1
    return tuple(sorted(d.items()))


def _mono_diff(mono: tuple, var: tuple):
    """``(exponent, mono / var)`` or ``None`` when ``var`` is absent."""
    d = dict(mono)
    e = d.get(var)
    if not e:
        return None
    if e == 1:
        del d[var]
    else:
        d[var] = e - 1
    return e, tuple(sorted(d.items()))


class FockSpace:
    """Fock module for ``ell`` pairs of oscillators with the given moding.

    Creation variables are ``(flavor, i, r2)`` standing for ``flavor_i(-r2/2)``,
    ``flavor`` being ``"a"`` or ``"s"`` (for ``a*``).
    """

    def __init__(self, ell: int, moding: str):
        if moding not in ("int", "half"):
            raise ValueError("moding must be 'int' or 'half'")
        self.ell = ell
        self.moding = moding
        self.sp: SpAlgebra = sp_algebra(ell)
        self.vacuum = ()
        self._cache: dict = {}
        self._pairs = [
            [(xy, int(c) if c.denominator == 1 else c) for xy, c in self.sp.quadratics[lab].pairs.items()]
            for lab in self.sp.labels
        ]

    # --- single oscillator modes ------------------------------------------
    # Modes are handled as doubled integers r2 = 2r so no Fractions appear here.
    def is_creation(self, flavor: str, r2: int) -> bool:
        return r2 < 0 or (r2 == 0 and self.moding == "int" and flavor == "s")

    def _valid_mode(self, r2: int) -> bool:
        return (r2 % 2 == 1) if self.moding == "half" else (r2 % 2 == 0)

    def _apply_osc(self, label, r2: int, vec: dict) -> dict:
        flavor, i = label
        out: dict = {}
        if self.is_creation(flavor, r2):
            var = (flavor, i, -r2)
            for mono, c in vec.items():
                _add_into(out, {_mono_mul(mono, var): 1}, c)
            return out
        # annihilator: a_i(r) ~ d/d a*_i(-r),  a*_i(r) ~ -d/d a_i(-r)
        conj = "s" if flavor == "a" else "a"
        sign = 1 if flavor == "a" else -1
        var = (conj, i, r2)
        for mono, c in vec.items():
            d = _mono_diff(mono, var)
            if d is not None:
                e, rest = d
                _add_into(out, {rest: sign * e}, c)
        return out

    # --- currents -------------------------------------------------------------
    def _pair_candidates(self, x, y, m2: int, mono: tuple) -> set:
        rs = set()
        if m2 == 0 and self.moding == "int":
            rs.add(0)  # zero-mode pair may carry the symmetric-ordering constant
        # both creation operators: m <= r <= 0
        r2 = m2 + (1 if self.moding == "half" else 0)
        while r2 <= 0:
            if self.is_creation(x[0], r2) and self.is_creation(y[0], m2 - r2):
                rs.add(r2)
            r2 += 2
        for (fl, i, v2), _ in mono:
            # x(v2/2) or y(v2/2) annihilates this variable
            if i == x[1] and fl != x[0] and not self.is_creation(x[0], v2):
                rs.add(v2)
            if i == y[1] and fl != y[0] and not self.is_creation(y[0], v2):
                rs.add(m2 - v2)
        return {r for r in rs if self._valid_mode(r)}

    def _apply_pair(self, x, y, m2: int, mono: tuple) -> dict:
        out: dict = {}
        vec = {mono: 1}
        for r2 in self._pair_candidates(x, y, m2, mono):
            s2 = m2 - r2
            xc, yc = self.is_creation(x[0], r2), self.is_creation(y[0], s2)
            if not xc and yc:
                res = self._apply_osc(y, s2, self._apply_osc(x, r2, vec))
            else:
                res = self._apply_osc(x, r2, self._apply_osc(y, s2, vec))
            _add_into(out, res, 1)
            if r2 == 0 and s2 == 0 and x[1] == y[1] and x[0] != y[0]:
                # symmetric ordering of the zero-mode pair a_i(0), a*_i(0)
                _add_into(out, vec, HALF)
        return out

    def _apply_current_mono(self, k: int, m: int, mono: tuple) -> dict:
        key = (k, m, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        for (x, y), c in self._pairs[k]:
            _add_into(out, self._apply_pair(x, y, 2 * m, mono), c)
        self._cache[key] = out
        return out

    def current(self, k: int, m: int, vec: dict) -> dict:
        """Apply the mode ``X_k(m)`` of basis element ``k`` to a state."""
        out: dict = {}
        for mono, c in vec.items():
            _add_into(out, self._apply_current_mono(k, m, mono), c)
        return out

    def combo(self, coeffs: dict, m: int, vec: dict) -> dict:
        """Apply ``sum_k coeffs[k] X_k(m)``."""
        out: dict = {}
        for k, c in coeffs.items():
            _add_into(out, self.current(k, m, vec), c)
        return out

    # --- grading ---------------------------------------------------------------
    @staticmethod
    def energy(mono: tuple) -> Fraction:
        return sum((Fraction(r2, 2) * e for (_, _, r2), e in mono), Fraction(0))

    @staticmethod
    def zero_degree(mono: tuple) -> int:
        return sum(e for (_, _, r2), e in mono if r2 == 0)

    @staticmethod
    def parity(mono: tuple) -> int:
        return sum(e for _, e in mono) % 2

    def creation_vars(self, max_energy) -> list:
        out = []
        for i in range(self.ell):
            if self.moding == "int":
                out.append(("s", i, 0))
            r2 = 1 if self.moding == "half" else 2
            while Fraction(r2, 2) <= max_energy:
                out.append(("a", i, r2))
                out.append(("s", i, r2))
                r2 += 2
        return sorted(out)

    def basis(self, max_energy, max_zero_degree: int | None = None, parity: int | None = None) -> list:
        """Monomial states of energy ``<= max_energy`` (and bounded zero-mode degree)."""
        max_energy = Fraction(max_energy)
        if max_zero_degree is None:
            max_zero_degree = int(max_energy)
        vars_ = self.creation_vars(max_energy)
        out = []

        def rec(idx, mono, en, zd):
            if idx == len(vars_):
                if parity is None or sum(e for _, e in mono) % 2 == parity:
                    out.append(tuple(sorted(mono)))
                return
            var = vars_[idx]
            w = Fraction(var[2], 2)
            e = 0
            while True:
                rec(idx + 1, mono + ([(var, e)] if e else []), en + e * w, zd + (e if var[2] == 0 else 0))
                e += 1
                if en + e * w > max_energy or (var[2] == 0 and zd + e > max_zero_degree):
                    break

        rec(0, [], Fraction(0), 0)
        return sorted(out)

    # --- top levels --------------------------------------------------------------
    def cartan_eigen(self, mono: tuple) -> tuple:
        vals = []
        for i in range(1, self.ell + 1):
            res = self.current(self.sp.h(i), 0, {mono: 1})
            if set(res) - {mono}:
                raise AssertionError("monomial is not a Cartan eigenvector")
            vals.append(res.get(mono, Fraction(0)))
        return tuple(vals)

    def top_highest_weights(self, parity: int, max_zero_degree: int = 4) -> set:
        """Highest weights (level -1/2) of the lowest-energy space in a parity sector."""
        states = self.basis(Fraction(3, 2), max_zero_degree, parity)
        e0 = min(self.energy(s) for s in states)
        top = [s for s in states if self.energy(s) == e0]
        out = set()
        for s in top:
            if all(not self.current(k, 0, {s: 1}) for k in self.sp.n_plus):
                out.add(AffineWeight.from_finite(LEVEL, self.cartan_eigen(s)))
        return out


@lru_cache(maxsize=None)
def fock_space(ell: int, moding: str) -> FockSpace:
    return FockSpace(ell, moding)


def parse_sector(sector: str) -> tuple:
    """``"half-even"`` -> ``("half", 0)``."""
    if sector not in SECTORS:
        raise ValueError(f"unknown sector {sector!r}; choose from {SECTORS}")
    moding, par = sector.split("-")
    return moding, 0 if par == "even" else 1


def normal_ordered_product(space: FockSpace, a: int, b: int, j: int, vec: dict) -> dict:
    """Mode ``sum_{m<=-1} A(m)B(j-m) + sum_{m>=0} B(j-m)A(m)`` of ``:A(z)B(z):``."""
    out: dict = {}
    for mono, c in vec.items():
        en = space.energy(mono)
        for m in range(math.ceil(j - en), 0):
            inner = space._apply_current_mono(b, j - m, mono)
            if inner:
                _add_into(out, space.current(a, m, inner), c)
        for m in range(0, math.floor(en) + 1):
            inner = space._apply_current_mono(a, m, mono)
            if inner:
                _add_into(out, space.current(b, j - m, inner), c)
    return out


def relation_field_mode(space: FockSpace, j: int, vec: dict, sign: int = -1) -> dict:
    """Mode ``j`` of ``:X_{e1+e2} X_{e1+e2}: + sign * :X_{2e1} X_{2e2}:``."""
    sp = space.sp
    e = sp.eps(1, 1, *([0] * (sp.ell - 2)))
    x1 = sp.eps(2, 0, *([0] * (sp.ell - 2)))
    x2 = sp.eps(0, 2, *([0] * (sp.ell - 2)))
    out = normal_ordered_product(space, e, e, j, vec)
    _add_into(out, normal_ordered_product(space, x1, x2, j, vec), sign)
    return out


@dataclass
class Prop33Report:
    sector: str
    max_degree: int
    modes: tuple
    sign: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "sector": self.sector,
            "max_degree": self.max_degree,
            "modes": list(self.modes),
            "sign": self.sign,
            "checked": self.checked,
            "ok": self.ok,
            "failures": self.failures,
        }


def _describe(mono: tuple) -> str:
    if not mono:
        return "|0>"
    parts = []
    for (fl, i, r2), e in mono:
        name = ("a" if fl == "a" else "a*") + f"{i + 1}({fmt_q(-Fraction(r2, 2))})"
        parts.append(name + (f"^{e}" if e > 1 else ""))
    return " ".join(parts) + "|0>"


def prop33_check(
    sector: str,
    max_degree: int = 4,
    modes: tuple = (-4, 4),
    sign: int = -1,
    ell: int = 2,
    max_failures: int = 5,
) -> Prop33Report:
    """Check that every mode in ``modes`` of the relation field kills the sector.

    States are all Fock monomials of the sector with energy ``<= max_degree``
    (and, for integer moding, at most ``max_degree`` zero-mode quanta).
    """
    moding, parity = parse_sector(sector)
    space = fock_space(ell, moding)
    states = space.basis(max_degree, max_degree, parity)
    report = Prop33Report(sector, max_degree, tuple(modes), sign)
    lo, hi = modes
    for j in range(lo, hi + 1):
        for s in states:
            res = relation_field_mode(space, j, {s: 1}, sign)
            report.checked += 1
            if res and len(report.failures) < max_failures:
                report.failures.append(
                    {
                        "mode": j,
                        "state": _describe(s),
                        "image_terms": len(res),
                    }
                )
    return report
