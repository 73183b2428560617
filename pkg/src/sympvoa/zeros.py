"""Common zeros ``T^n`` of the rank-2 polynomials p_1, p_2, p_3.

Two independent routes produce ``T^n``: :func:`brute_force_T` filters a finite
candidate grid by exact evaluation, and :func:`lemma55_set` writes the four
parametric families down directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import MultiPoly, Q, Scalar, binom, falling_product, fmt_q

HALF = Fraction(1, 2)


def _h(i: int) -> MultiPoly:
    return MultiPoly.variable(i, 2)


@lru_cache(maxsize=None)
def closed_form(index: int, n: int) -> MultiPoly:
    """The explicit rank-2 polynomials (as written, not normalized)."""
    h1, h2 = _h(0), _h(1)
    if index == 1:
        return falling_product(h1 - h2, 2 * n, -1)
    if index == 2:
        # (h1 - n + 3/2)(h1 - n + 5/2)...(h1 + 1/2) * h2(h2-1)...(h2-n+1)
        return falling_product(h1 + HALF, n, -1) * falling_product(h2, n, -1)
    if index == 3:
        s = h1 + h2
        total = MultiPoly.constant(0, 2)
        for k in range(n + 1):
            coeff = Fraction(factorial(n) * 4**n, factorial(k) * 4**k)
            total = total + falling_product(s - 2 * n + 1, 2 * k, 1) * falling_product(h2, n - k, -1) * coeff
        return total
    raise ValueError("index must be 1, 2 or 3")


@lru_cache(maxsize=None)
def polynomials(n: int, source: str = "closed-form") -> tuple:
    """``(p_1, p_2, p_3)`` from the closed forms or from the PBW engine."""
    if source == "closed-form":
        return tuple(closed_form(i, n) for i in (1, 2, 3))
    if source == "uea":
        from .uea import compute_p

        return tuple(compute_p(i, n) for i in (1, 2, 3))
    raise ValueError(f"unknown polynomial source {source!r}")


@dataclass(frozen=True)
class ZeroSet:
    n: int
    part1: frozenset  # integer points
    part2: frozenset  # half-integer points

    @property
    def points(self) -> frozenset:
        return self.part1 | self.part2

    def to_json(self) -> dict:
        def pts(s):
            return [[fmt_q(a), fmt_q(b)] for a, b in sorted(s)]

        return {"n": self.n, "T1": pts(self.part1), "T2": pts(self.part2)}


def candidate_grid(n: int) -> set:
    """Common zeros of the factored p_1 and p_2.

    ``p_1 = 0`` iff ``h1 - h2`` is in ``{0..2n-1}``; ``p_2 = 0`` iff ``h1`` is in
    ``{-1/2, ..., n-3/2}`` or ``h2`` is in ``{0..n-1}``.
    """
    out = set()
    for d in range(2 * n):
        for h2 in range(n):
            out.add((Fraction(h2 + d), Fraction(h2)))
        for i in range(n):
            h1 = Fraction(2 * i - 1, 2)
            out.add((h1, h1 - d))
    return out


def brute_force_T(n: int, source: str = "closed-form") -> ZeroSet:
    """Filter the candidate grid by exact evaluation of all three polynomials."""
    ps = polynomials(n, source)
    keep = [pt for pt in candidate_grid(n) if all(p(pt) == 0 for p in ps)]
    part1 = frozenset(pt for pt in keep if pt[0].denominator == 1 and pt[1].denominator == 1)
    part2 = frozenset(pt for pt in keep if pt[0].denominator == 2 and pt[1].denominator == 2)
    if len(part1) + len(part2) != len(keep):
        raise AssertionError("zero with mixed integrality")
    return ZeroSet(n, part1, part2)


def _qrange(lo: Fraction, hi: Fraction):
    x = lo
    while x <= hi:
        yield x
        x += 1


@lru_cache(maxsize=None)
def lemma55_set(n: int) -> ZeroSet:
    """The four explicit families: even and odd offsets ``h1 - h2`` in each part."""
    if n < 1:
        raise ValueError("n must be positive")
    t1, t2 = set(), set()
    for r in range(n):
        for s in range(n - r):
            t1.add((Fraction(s + 2 * r), Fraction(s)))
            t1.add((Fraction(s + 2 * r + 1), Fraction(s)))
        for s in _qrange(Fraction(-2 * r - 1, 2), Fraction(2 * n - 4 * r - 3, 2)):
            t2.add((s + 2 * r, s))
        for s in _qrange(Fraction(-2 * r - 3, 2), Fraction(2 * n - 4 * r - 5, 2)):
            t2.add((s + 2 * r + 1, s))
    return ZeroSet(n, frozenset(t1), frozenset(t2))


def tilde_p3(n: int, r: int, s: Scalar, odd: bool = False) -> Fraction:
    """``p_3`` restricted to the line ``h1 - h2 = 2r`` (or ``2r+1`` when ``odd``).

    The even line uses the binomial rewriting
    ``4^n n! (n-r)! r! C(s, n-r) sum_k C(s-n+r+k, r) C(s-n+r+k-1/2, k)``
    (the ``n!`` comes from the leading coefficient ``n! 4^n / (k! 4^k)``);
    the odd line is evaluated from ``p_3`` directly.
    """
    s = Q(s)
    if odd:
        return closed_form(3, n)((s + 2 * r + 1, s))
    total = sum(
        (binom(s - n + r + k, r) * binom(s - n + r + k - HALF, k) for k in range(n + 1)),
        Fraction(0),
    )
    return 4**n * factorial(n) * factorial(n - r) * factorial(r) * binom(s, n - r) * total


def shifted(points, dx: int, dy: int) -> set:
    return {(a + dx, b + dy) for a, b in points}


def lemma56_check(n: int, drop_seed: bool = False) -> bool:
    """Both one-step recursions ``T_i^{n+1} = T_i^n u (T_i^n + (1,0)) u (T_i^n + (1,1)) u {seed}``."""
    cur, nxt = lemma55_set(n), lemma55_set(n + 1)
    seed1 = {(Fraction(2 * n + 1), Fraction(0))}
    seed2 = {(n - HALF, -n - Fraction(3, 2))}
    if drop_seed:
        seed1 = seed2 = set()
    rec1 = set(cur.part1) | shifted(cur.part1, 1, 0) | shifted(cur.part1, 1, 1) | seed1
    rec2 = set(cur.part2) | shifted(cur.part2, 1, 0) | shifted(cur.part2, 1, 1) | seed2
    return rec1 == set(nxt.part1) and rec2 == set(nxt.part2)
