"""Exact arithmetic over Q and Q(i): scalars, polynomials, matrices."""

from fractions import Fraction as Rational

from .gaussian import GaussianRational, I, as_scalar, format_scalar, gauss, inverse, is_real, parse_scalar
from .matrix import ExactMatrix, charpoly, kernel_basis, minimal_polynomial, nullspace, rank, rref, solve_in_span
from .poly import (
    Poly,
    all_roots_purely_imaginary,
    all_roots_real,
    gaussian_spectrum,
    sturm_chain,
    sturm_distinct_real_roots,
)

__all__ = [
    "Rational",
    "GaussianRational",
    "I",
    "as_scalar",
    "format_scalar",
    "gauss",
    "inverse",
    "is_real",
    "parse_scalar",
    "ExactMatrix",
    "charpoly",
    "kernel_basis",
    "minimal_polynomial",
    "nullspace",
    "rank",
    "rref",
    "solve_in_span",
    "Poly",
    "all_roots_purely_imaginary",
    "all_roots_real",
    "gaussian_spectrum",
    "sturm_chain",
    "sturm_distinct_real_roots",
]
