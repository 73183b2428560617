"""Weights whose adjacent finite coordinates all lie in one component of T^n.

The chained search over the zero sets is compared with the recursive
enumeration in :mod:`sympvoa.weights`; the union of the two families is the
module list.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import AffineWeight
from .exact import fmt_q
from .weights import WeightSet, _exceptional, canonical, enumerate_S, p_plus_1
from .zeros import lemma55_set


def level_of(n: int) -> Fraction:
    return Fraction(2 * n - 3, 2)


def _component(i: int, n: int) -> frozenset:
    zs = lemma55_set(n)
    if i == 1:
        return zs.part1
    if i == 2:
        return zs.part2
    raise ValueError("i must be 1 or 2")


def _chains(pairs: frozenset, length: int) -> list:
    """All tuples ``(x_1..x_length)`` with every ``(x_j, x_{j+1})`` in ``pairs``."""
    succ: dict = {}
    for a, b in pairs:
        succ.setdefault(a, []).append(b)
    out = []

    def rec(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for b in succ.get(prefix[-1], ()):
            rec(prefix + [b])

    for a in sorted(succ):
        rec([a])
    return out


def tilde_S(i: int, n: int, ell: int) -> WeightSet:
    """Level ``n - 3/2`` weights with all adjacent finite pairs in ``T_i^n``.

    The search is finite because every coordinate is drawn from the
    coordinates occurring in ``T_i^n``.
    """
    if ell < 2:
        raise ValueError("rank must be at least 2")
    lvl = level_of(n)
    members = [AffineWeight.from_finite(lvl, fin) for fin in _chains(_component(i, n), ell)]
    return WeightSet(f"S{i}", n, ell, canonical(members))


def _adjacent_pairs(lam: AffineWeight) -> list:
    fin = lam.finite_part
    return [(fin[j], fin[j + 1]) for j in range(len(fin) - 1)]


def _require_level(lam: AffineWeight, n: int) -> None:
    if lam.level != level_of(n):
        raise ValueError(f"weight has level {fmt_q(lam.level)}, expected {fmt_q(level_of(n))}")


def check_module(lam: AffineWeight, n: int) -> bool:
    """True iff all adjacent finite pairs lie in the same component of ``T^n``."""
    _require_level(lam, n)
    pairs = _adjacent_pairs(lam)
    return any(all(p in _component(i, n) for p in pairs) for i in (1, 2))


def _peel_rule(lam: AffineWeight, zs: frozenset) -> tuple:
    """Finite part of the level-one weight read off from the adjacent pairs of ``lam``."""
    pairs = _adjacent_pairs(lam)
    head = [0 if p in zs else 1 for p in pairs]
    last = pairs[-1]
    tail = 0 if last in zs or (last[0] - 1, last[1]) in zs else 1
    return tuple(head + [tail])


def induction_step_check(n: int, ell: int, rule: str = "pairs") -> tuple:
    """Peel one level-one weight off each member of the ``n+1`` integer family.

    With ``rule="pairs"`` the level-one weight ``Lam`` is read off the
    adjacent pairs of ``lam``: ``<Lam, h_j>`` is 0 when ``(lam(h_j),
    lam(h_{j+1}))`` lies in ``T_1^n`` and 1 otherwise (``j < l``), and
    ``<Lam, h_l>`` is 0 when the last pair lies in ``T_1^n`` or its shift by
    ``(1, 0)``.  With ``rule="search"`` any ``Lam`` in ``P_+^1`` is accepted.
    Success means ``lam - Lam`` lies in ``tilde_S(1, n, l)`` for every
    non-exceptional ``lam``.  Returns ``(ok, failures)``.
    """
    if rule not in ("pairs", "search"):
        raise ValueError(f"unknown rule {rule!r}")
    target = tilde_S(1, n, ell).as_set()
    zs = _component(1, n)
    exceptional = _exceptional(1, n, ell)
    failures = []
    for lam in tilde_S(1, n + 1, ell):
        if lam == exceptional:
            continue
        if rule == "pairs":
            fw = AffineWeight.from_finite(1, _peel_rule(lam, zs))
            ok = fw in p_plus_1(ell) and lam - fw in target
        else:
            ok = any(lam - fw in target for fw in p_plus_1(ell))
        if not ok:
            failures.append(lam)
    return not failures, failures


@dataclass
class ClassificationReport:
    n: int
    ell: int
    tilde_S1: WeightSet
    tilde_S2: WeightSet
    S1: WeightSet
    S2: WeightSet
    module_list: list  # [(weight, "S1" | "S2")]
    corollary64: list = field(default_factory=list)  # [(weight, flag)]

    @property
    def match(self) -> bool:
        return self.tilde_S1.as_set() == self.S1.as_set() and self.tilde_S2.as_set() == self.S2.as_set()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "level": fmt_q(level_of(self.n)),
            "match": self.match,
            "tilde_S1": self.tilde_S1.to_json()["members"],
            "tilde_S2": self.tilde_S2.to_json()["members"],
            "S1": self.S1.to_json()["members"],
            "S2": self.S2.to_json()["members"],
            "module_list": [
                {"weight": w.to_json(), "text": str(w), "family": src} for w, src in self.module_list
            ],
            "submodule_flags": [{"weight": w.to_json(), "flag": f} for w, f in self.corollary64],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow([f"L{i}" for i in range(self.ell + 1)] + ["level", "flag"])
        for w, f in self.corollary64:
            wr.writerow([fmt_q(x) for x in w.lam] + [fmt_q(w.level), f])
        return buf.getvalue()


def classify(n: int, ell: int = 2, candidates=()) -> ClassificationReport:
    """Build both families two ways and flag each candidate weight.

    A weight in the list is flagged ``maximal-submodule`` (the image of the
    loop module is the maximal submodule); any other weight is flagged
    ``whole-module``.
    """
    s1, s2 = enumerate_S(1, n, ell), enumerate_S(2, n, ell)
    seen = set()
    module_list = []
    for ws in (s1, s2):
        for w in ws:
            if w not in seen:
                seen.add(w)
                module_list.append((w, ws.label))
    flags = []
    flagged = set()
    for w in list(candidates) + [w for w, _ in module_list]:
        if w in flagged:
            continue
        flagged.add(w)
        flags.append((w, "maximal-submodule" if w in seen else "whole-module"))
    return ClassificationReport(
        n, ell, tilde_S(1, n, ell), tilde_S(2, n, ell), s1, s2, module_list, flags
    )
