"""Textual real literals, cross-backend comparison, and the ExactReal union.

Literal grammar (round trip is bit-exact for the first two):
    "p/q"                  rational, e.g. "7/10", "-3"
    "(p+q*sqrt(d))/r"      quadratic surd, e.g. "(-1+1*sqrt(5))/2"
    "~decimal@digits"      BigReal enclosure, e.g. "~0.1415926@64"
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from ..errors import Comparison
from .bigreal import DEFAULT_DIGITS, BigReal
from .surd import QuadraticSurd

ExactReal = Union[Fraction, QuadraticSurd]
Real = Union[Fraction, QuadraticSurd, BigReal]

_SURD_RE = re.compile(
    r"^\(\s*(?P<p>[+-]?\d+)\s*(?P<sign>[+-])\s*(?P<q>\d+)\s*\*\s*"
    r"sqrt\(\s*(?P<d>\d+)\s*\)\s*\)\s*/\s*(?P<r>[+-]?\d+)$"
)
_BIG_RE = re.compile(r"^~(?P<dec>[+-]?[0-9.]+(?:[eE][+-]?\d+)?)@(?P<digits>\d+)$")


def parse_real(text: str) -> Real:
    """Parse a textual real literal into Fraction, QuadraticSurd or BigReal."""
    s = text.strip().replace("−", "-")  # unicode minus
    m = _BIG_RE.match(s)
    if m:
        return BigReal.from_decimal(m.group("dec"), int(m.group("digits")))
    m = _SURD_RE.match(s)
    if m:
        q = int(m.group("q"))
        if m.group("sign") == "-":
            q = -q
        return QuadraticSurd(int(m.group("p")), q, int(m.group("d")), int(m.group("r")))
    return Fraction(s)


def format_real(value: Real) -> str:
    """Canonical literal; parse_real(format_real(x)) == x for exact values."""
    if isinstance(value, BigReal):
        return repr(value)
    if isinstance(value, QuadraticSurd):
        if value.q == 0:
            return f"{value.p}/{value.r}"
        return repr(value)
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def to_exact(value) -> ExactReal:
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, QuadraticSurd):
        return value
    raise TypeError(f"not an exact real: {value!r}")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction, QuadraticSurd))


def as_bigreal(value, digits: int = DEFAULT_DIGITS) -> BigReal:
    return BigReal.from_exact(value, digits)


def _exact_cmp(a, b) -> int:
    if isinstance(a, QuadraticSurd):
        return (a - b).sign()
    if isinstance(b, QuadraticSurd):
        return -((b - a).sign())
    return (a > b) - (a < b)


def compare(a, b) -> Comparison:
    """Three-way comparison; UNDECIDABLE only when enclosures overlap.

    Exact operands always decide.  A BigReal against an exact value is
    decided by exact comparison with the dyadic endpoints; two BigReals
    decide iff their enclosures are disjoint (or both are one exact point).
    """
    a_big = isinstance(a, BigReal)
    b_big = isinstance(b, BigReal)
    if not a_big and not b_big:
        s = _exact_cmp(to_exact(a), to_exact(b))
        return Comparison(s)
    if a_big and b_big:
        alo, ahi = a.endpoints_as_fractions()
        blo, bhi = b.endpoints_as_fractions()
        if ahi < blo:
            return Comparison.LESS
        if alo > bhi:
            return Comparison.GREATER
        if alo == ahi == blo == bhi:
            return Comparison.EQUAL
        return Comparison.UNDECIDABLE
    if b_big:
        flipped = compare(b, a)
        if flipped is Comparison.LESS:
            return Comparison.GREATER
        if flipped is Comparison.GREATER:
            return Comparison.LESS
        return flipped
    lo, hi = a.endpoints_as_fractions()
    bx = to_exact(b)
    if isinstance(bx, QuadraticSurd):
        if (bx - hi).sign() > 0:
            return Comparison.LESS
        if (bx - lo).sign() < 0:
            return Comparison.GREATER
        if lo == hi and (bx - lo).sign() == 0:
            return Comparison.EQUAL
        return Comparison.UNDECIDABLE
    if hi < bx:
        return Comparison.LESS
    if lo > bx:
        return Comparison.GREATER
    if lo == hi == bx:
        return Comparison.EQUAL
    return Comparison.UNDECIDABLE
