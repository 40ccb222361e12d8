"""Exact and verified-approximate real arithmetic.

Rational numbers are plain ``fractions.Fraction``; quadratic surds are the
kernel-backed ``QuadraticSurd``; enclosures are ``BigReal``.
"""

from fractions import Fraction as Rational

from .bigreal import DEFAULT_DIGITS, MAX_DIGITS, BigReal, floor_verified
from .real import ExactReal, Real, as_bigreal, compare, format_real, is_exact, parse_real, to_exact
from .surd import KERNEL, QuadraticSurd, floor_exact, sqrt_exact, sqrt_rational, surd_normalize

__all__ = [
    "Rational",
    "QuadraticSurd",
    "BigReal",
    "ExactReal",
    "Real",
    "KERNEL",
    "DEFAULT_DIGITS",
    "MAX_DIGITS",
    "surd_normalize",
    "floor_exact",
    "floor_verified",
    "sqrt_exact",
    "sqrt_rational",
    "compare",
    "parse_real",
    "format_real",
    "to_exact",
    "is_exact",
    "as_bigreal",
]
