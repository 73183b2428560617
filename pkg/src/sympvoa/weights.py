"""The admissible-weight families S_1^n, S_2^n built by Minkowski-sum recursion."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import AffineWeight
from .exact import fmt_q


@dataclass(frozen=True)
class WeightSet:
    label: str  # "S1", "S2" or "P+1"
    n: int
    ell: int
    members: tuple  # sorted, deduplicated AffineWeights

    def __contains__(self, lam: AffineWeight) -> bool:
        return lam in set(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "ell": self.ell,
            "members": [m.to_json() for m in self.members],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"L{i}" for i in range(self.ell + 1)] + ["level"])
        for m in self.members:
            w.writerow([fmt_q(x) for x in m.lam] + [fmt_q(m.level)])
        return buf.getvalue()


def canonical(weights) -> tuple:
    """Deduplicate (modulo delta) and sort by Lambda coefficients."""
    return tuple(sorted(set(weights), key=lambda w: w.lam))


def p_plus_1(ell: int) -> WeightSet:
    """Level-one dominant integral weights ``Lambda_0, ..., Lambda_l``."""
    if ell < 2:
        raise ValueError("rank must be at least 2")
    return WeightSet("P+1", 1, ell, canonical(AffineWeight.fundamental(ell, i) for i in range(ell + 1)))


def _exceptional(i: int, n: int, ell: int) -> AffineWeight:
    """The extra member of S_i^{n+1}: ``-(n+3/2) L_a + (2n+1) L_b``."""
    a, b = (0, 1) if i == 1 else (ell, ell - 1)
    lam = [Fraction(0)] * (ell + 1)
    lam[a] = -Fraction(2 * n + 3, 2)
    lam[b] = Fraction(2 * n + 1)
    return AffineWeight(tuple(lam))


@lru_cache(maxsize=None)
def enumerate_S(i: int, n: int, ell: int) -> WeightSet:
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    if n < 1:
        raise ValueError("n must be positive")
    if ell < 2:
        raise ValueError("rank must be at least 2")
    if n == 1:
        a, b = (0, 1) if i == 1 else (ell, ell - 1)
        half = [Fraction(0)] * (ell + 1)
        half[a] = Fraction(-1, 2)
        other = [Fraction(0)] * (ell + 1)
        other[a] = Fraction(-3, 2)
        other[b] = Fraction(1)
        members = canonical([AffineWeight(tuple(half)), AffineWeight(tuple(other))])
    else:
        prev = enumerate_S(i, n - 1, ell)
        shifted = [lam + fw for lam in prev for fw in p_plus_1(ell)]
        members = canonical(shifted + [_exceptional(i, n - 1, ell)])
    return WeightSet(f"S{i}", n, ell, members)


def contains(ws: WeightSet, lam: AffineWeight) -> bool:
    return lam in ws
