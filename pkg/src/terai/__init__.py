"""Computational checks for x^2 + b^y = c^z over parametrized Pythagorean
triples (a, b, c) = (2mn, m^2 - n^2, m^2 + n^2) with c = 5 (mod 8) and
m + n, m - n prime, where (2mn, 2, 2) is the only solution."""

__version__ = "0.1.0"

from .arith import as_perfect_square, is_prime, isqrt, jacobi, power_exponent_of
from .descent import descent_trace, scan_cases
from .gaussint import GaussianInt, TwoSquares, two_square_decompositions
from .sieve import parity_certificate
from .solver import Bounds, find_solutions, verify_instance, verify_range
from .triples import check_hypotheses, make_instance, scan_instances

__all__ = [
    "__version__",
    "Bounds",
    "GaussianInt",
    "TwoSquares",
    "as_perfect_square",
    "check_hypotheses",
    "descent_trace",
    "find_solutions",
    "is_prime",
    "isqrt",
    "jacobi",
    "make_instance",
    "parity_certificate",
    "power_exponent_of",
    "scan_cases",
    "scan_instances",
    "two_square_decompositions",
    "verify_instance",
    "verify_range",
]
