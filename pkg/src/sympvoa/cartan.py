"""Root data for C_l and C_l^(1): weights, coroots, pairings and admissibility.

Conventions
-----------
* Finite roots are integer vectors in the epsilon basis; ``eps_i(h_j) = delta_ij``.
* The invariant form is normalized so the highest root ``theta = 2 eps_1`` has
  square length 2; long roots ``2 eps_i`` have length 2, short roots length 1.
* Affine coroots are integer vectors over ``(alpha_0^v, ..., alpha_l^v)``.  All
  dual marks of C_l^(1) are 1, so ``c = alpha_0^v + ... + alpha_l^v`` and
  ``h_j = alpha_j^v + ... + alpha_l^v``.
* Affine weights are coefficient vectors over ``(Lambda_0, ..., Lambda_l)``
  plus a delta coefficient that is carried along but ignored by ``==``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import Q, RationalSpan, Scalar, fmt_q

Coroot = tuple  # tuple[int, ...] of length l+1


@dataclass(frozen=True)
class FiniteRootSystem:
    ell: int
    roots: tuple
    positive_roots: tuple
    simple_roots: tuple
    highest_root: tuple

    @staticmethod
    def is_long(root: Sequence[int]) -> bool:
        return sum(abs(x) for x in root) == 2 and max(abs(x) for x in root) == 2

    @staticmethod
    def is_positive(root: Sequence[int]) -> bool:
        return next(x for x in root if x) > 0

    def norm2(self, root) -> int:
        """``(root|root)`` with the theta-normalized form."""
        return 2 if self.is_long(root) else 1

    def coroot_h(self, root) -> tuple:
        """Coroot in the ``h_1, ..., h_l`` basis: ``h_i`` for ``2 eps_i``, ``h_i +- h_j`` else."""
        if self.is_long(root):
            return tuple(x // 2 for x in root)
        return tuple(root)


@lru_cache(maxsize=None)
def build_root_system(ell: int) -> FiniteRootSystem:
    """The C_l root system ``{+-(eps_i +- eps_j), +-2 eps_i}``."""
    if ell < 2:
        raise ValueError("rank must be at least 2")

    def e(i):
        v = [0] * ell
        v[i] = 1
        return v

    roots = []
    for i, j in itertools.combinations(range(ell), 2):
        for si, sj in ((1, -1), (1, 1), (-1, 1), (-1, -1)):
            roots.append(tuple(si * a + sj * b for a, b in zip(e(i), e(j))))
    for i in range(ell):
        roots.append(tuple(2 * x for x in e(i)))
        roots.append(tuple(-2 * x for x in e(i)))
    roots = tuple(sorted(set(roots), reverse=True))
    positive = tuple(r for r in roots if FiniteRootSystem.is_positive(r))
    simple = tuple(
        tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(ell - 1)
    ) + (tuple(2 * x for x in e(ell - 1)),)
    return FiniteRootSystem(ell, roots, positive, simple, tuple(2 * x for x in e(0)))


# --- affine coroots --------------------------------------------------------

def c_vec(ell: int) -> Coroot:
    return (1,) * (ell + 1)


def h_vec(ell: int, j: int) -> Coroot:
    """``h_j`` (1-based) over the simple coroots."""
    return tuple(1 if i >= j else 0 for i in range(ell + 1))


def simple_coroots(ell: int) -> tuple:
    return tuple(tuple(int(i == k) for i in range(ell + 1)) for k in range(ell + 1))


def h_to_coroot(ell: int, hcoeffs: Sequence[int], c_coeff: int = 0) -> Coroot:
    out = [c_coeff] * (ell + 1)
    for j, x in enumerate(hcoeffs, start=1):
        if x:
            for i in range(j, ell + 1):
                out[i] += x
    return tuple(out)


def pi_1(ell: int) -> frozenset:
    """``{2 alpha_0^v + alpha_1^v, alpha_1^v, ..., alpha_l^v}``."""
    s = simple_coroots(ell)
    first = tuple(2 * a + b for a, b in zip(s[0], s[1]))
    return frozenset((first,) + s[1:])


def pi_2(ell: int) -> frozenset:
    """``{alpha_0^v, ..., alpha_{l-1}^v, alpha_{l-1}^v + 2 alpha_l^v}``."""
    s = simple_coroots(ell)
    last = tuple(a + 2 * b for a, b in zip(s[ell - 1], s[ell]))
    return frozenset(s[:ell] + (last,))


@dataclass(frozen=True)
class RealCoroot:
    root: tuple  # finite part beta, epsilon basis
    m: int  # delta multiple
    vector: Coroot


@lru_cache(maxsize=None)
def real_coroots_up_to(ell: int, bound: int) -> tuple:
    """Positive real coroots ``(beta + m delta)^v`` with ``0 <= m <= bound``.

    ``(beta + m delta)^v = beta^v + m * 2/(beta|beta) * c``.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    rs = build_root_system(ell)
    out = []
    for m in range(bound + 1):
        for beta in rs.roots:
            if m == 0 and not rs.is_positive(beta):
                continue
            c_coeff = m * 2 // rs.norm2(beta)
            out.append(RealCoroot(beta, m, h_to_coroot(ell, rs.coroot_h(beta), c_coeff)))
    return tuple(out)


def gamma0_coroot(ell: int) -> Coroot:
    """Coroot of ``delta - (eps_1 + eps_2)``."""
    beta = tuple(-1 if i < 2 else 0 for i in range(ell))
    (cr,) = [r.vector for r in real_coroots_up_to(ell, 1) if r.m == 1 and r.root == beta]
    return cr


# --- weights ---------------------------------------------------------------

@dataclass(frozen=True)
class AffineWeight:
    """``sum_i lam[i] Lambda_i + delta * delta``; equality ignores ``delta``."""

    lam: tuple
    delta: Fraction = field(default=Fraction(0), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(Q(x) for x in self.lam))
        object.__setattr__(self, "delta", Q(self.delta))
        if len(self.lam) < 3:
            raise ValueError("need coefficients for Lambda_0..Lambda_l with l >= 2")

    @property
    def ell(self) -> int:
        return len(self.lam) - 1

    @property
    def level(self) -> Fraction:
        return sum(self.lam, Fraction(0))

    @property
    def finite_part(self) -> tuple:
        """``(lambda(h_1), ..., lambda(h_l))``."""
        out = []
        acc = Fraction(0)
        for x in reversed(self.lam[1:]):
            acc += x
            out.append(acc)
        return tuple(reversed(out))

    @classmethod
    def from_finite(cls, level: Scalar, finite: Iterable[Scalar], delta: Scalar = 0) -> "AffineWeight":
        x = [Q(v) for v in finite] + [Fraction(0)]
        lam = [x[j] - x[j + 1] for j in range(len(x) - 1)]
        return cls(tuple([Q(level) - x[0]] + lam), delta)

    @classmethod
    def fundamental(cls, ell: int, i: int) -> "AffineWeight":
        return cls(tuple(int(k == i) for k in range(ell + 1)))

    @classmethod
    def zero(cls, ell: int) -> "AffineWeight":
        return cls((0,) * (ell + 1))

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a + b for a, b in zip(self.lam, other.lam)), self.delta + other.delta)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a - b for a, b in zip(self.lam, other.lam)), self.delta - other.delta)

    def __mul__(self, c: Scalar) -> "AffineWeight":
        c = Q(c)
        return AffineWeight(tuple(c * a for a in self.lam), c * self.delta)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"lambda": [fmt_q(x) for x in self.lam], "delta": fmt_q(self.delta)}

    @classmethod
    def from_json(cls, obj) -> "AffineWeight":
        if isinstance(obj, dict):
            return cls(tuple(Q(x) for x in obj["lambda"]), Q(obj.get("delta", 0)))
        return cls(tuple(Q(x) for x in obj))

    def __str__(self):
        parts = []
        for i, x in enumerate(self.lam):
            if x:
                parts.append(f"{fmt_q(x)}*L{i}" if x != 1 else f"L{i}")
        if self.delta:
            parts.append(f"{fmt_q(self.delta)}*delta")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def pair(lam: AffineWeight, x: Sequence[int]) -> Fraction:
    """``<lam, x>`` for a coroot ``x`` given over the simple coroots."""
    if len(x) != len(lam.lam):
        raise ValueError("rank mismatch")
    return sum((a * b for a, b in zip(lam.lam, x)), Fraction(0))


def rho(ell: int) -> AffineWeight:
    return AffineWeight((1,) * (ell + 1))


def lambda_n(n: int, ell: int) -> AffineWeight:
    """``(n - 3/2) Lambda_0``."""
    return AffineWeight((Fraction(2 * n - 3, 2),) + (0,) * ell)


def affine_root_weight(ell: int, finite_root: Sequence[int], m: int = 0) -> AffineWeight:
    """Level-zero weight ``finite_root + m delta`` written in the Lambda basis."""
    return AffineWeight.from_finite(0, finite_root, delta=m)


# --- admissibility ---------------------------------------------------------

@dataclass(frozen=True)
class AdmissibilityResult:
    cond1: bool
    cond2: bool
    pi_lambda: frozenset
    bound: int
    witness: tuple | None = None  # a coroot violating condition (1)

    @property
    def admissible(self) -> bool:
        return self.cond1 and self.cond2


def check_admissible(lam: AffineWeight, bound: int | None = None) -> AdmissibilityResult:
    """Bounded check of the two admissibility conditions.

    Only coroots with delta-multiple ``m <= bound`` are inspected, so a True
    result is a finite verification, not a proof.  ``pi_lambda`` collects the
    integral positive coroots that are not a sum of two integral positive
    coroots; for a root subsystem this is the same as "not a sum of several".
    """
    ell = lam.ell
    if bound is None:
        level = lam.level
        n = int(level + Fraction(3, 2)) if level.denominator == 2 else max(int(level), 1)
        bound = 2 * max(n, 1) + 2
    lr = lam + rho(ell)
    cond1 = True
    witness = None
    for cr in real_coroots_up_to(ell, bound):
        v = pair(lr, cr.vector)
        if v.denominator == 1 and v <= 0:
            witness = cr.vector
            cond1 = False
            break
    # a summand of a positive coroot has smaller height, so a height cap keeps
    # the indecomposability test exact inside the window
    cap = (ell + 1) * bound
    integral = [
        cr.vector
        for cr in real_coroots_up_to(ell, bound + 2)
        if sum(cr.vector) <= cap and pair(lam, cr.vector).denominator == 1
    ]
    iset = set(integral)
    simple = []
    for a in integral:
        decomposable = any(
            tuple(x - y for x, y in zip(a, b)) in iset for b in integral if b != a
        )
        if not decomposable:
            simple.append(a)
    span = RationalSpan()
    for a in simple:
        span.add(dict(enumerate(a)))
    return AdmissibilityResult(cond1, len(span) == ell + 1, frozenset(simple), bound, witness)
