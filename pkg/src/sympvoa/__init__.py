"""Exact verification tools for affine sp_2l at level n - 3/2."""

from .affine import TruncatedVerma, build_singular_vector, evaluate_module_criterion, singular_check
from .cartan import AffineWeight, build_root_system, check_admissible, lambda_n, pi_1, pi_2
from .classify import check_module, classify, tilde_S
from .exact import MultiPoly, Q, fmt_q
from .fock import prop33_check
from .uea import compute_p
from .weights import WeightSet, enumerate_S
from .weylreal import SpAlgebra, sp_algebra
from .zeros import brute_force_T, closed_form, lemma55_set, lemma56_check

__all__ = [
    "AffineWeight",
    "MultiPoly",
    "Q",
    "SpAlgebra",
    "TruncatedVerma",
    "WeightSet",
    "brute_force_T",
    "build_root_system",
    "build_singular_vector",
    "check_admissible",
    "check_module",
    "classify",
    "closed_form",
    "compute_p",
    "enumerate_S",
    "evaluate_module_criterion",
    "fmt_q",
    "lambda_n",
    "lemma55_set",
    "lemma56_check",
    "pi_1",
    "pi_2",
    "prop33_check",
    "singular_check",
    "sp_algebra",
    "tilde_S",
]
