"""Pure-Python quadratic surd kernel.

Semantically identical to the compiled kernel in ``_surd_cy.pyx``; keep the
two in sync (tests/test_numerics.py cross-checks them on random inputs).
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd, isqrt

from ..errors import DistinctRadicands
from ._surd_common import normalize_parts

_RATIONAL = (int, Fraction)


class QuadraticSurd:
    """Exact real (p + q*sqrt(d))/r with integer parts and square-free d.

    Invariants: r > 0, gcd(p, q, r) = 1, d square-free, and q == 0 iff the
    value is rational (then d == 0).  Field operations stay inside one
    quadratic field Q(sqrt(d)); mixing distinct radicands raises
    DistinctRadicands.  Values are immutable and hashable.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int, d: int, r: int = 1):
        p, q, d, r = normalize_parts(int(p), int(q), int(d), int(r))
        self.p = p
        self.q = q
        self.d = d
        self.r = r

    @classmethod
    def _make(cls, p: int, q: int, d: int, r: int) -> QuadraticSurd:
        # fast path: d already square-free; only gcd/sign cleanup needed
        self = object.__new__(cls)
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0:
            d = 0
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p //= g
            q //= g
            r //= g
        self.p = p
        self.q = q
        self.d = d
        self.r = r
        return self

    @classmethod
    def from_rational(cls, value: int | Fraction) -> QuadraticSurd:
        f = Fraction(value)
        return cls._make(f.numerator, 0, 0, f.denominator)

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.p, self.r)

    def sign(self) -> int:
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if q > 0:
            if p >= 0:
                return 1
            return 1 if q * q * self.d > p * p else -1
        if p <= 0:
            return -1
        return 1 if p * p > q * q * self.d else -1

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd._make(self.p, -self.q, self.d, self.r)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> QuadraticSurd | None:
        if isinstance(other, QuadraticSurd):
            if self.q != 0 and other.q != 0 and self.d != other.d:
                raise DistinctRadicands(f"cannot mix sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, _RATIONAL):
            f = Fraction(other)
            return QuadraticSurd._make(f.numerator, 0, 0, f.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticSurd._make(
            self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, d, self.r * o.r
        )

    __radd__ = __add__

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd._make(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticSurd._make(
            self.p * o.r - o.p * self.r, self.q * o.r - o.q * self.r, d, self.r * o.r
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticSurd._make(
            self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d, self.r * o.r
        )

    __rmul__ = __mul__

    def _reciprocal(self) -> QuadraticSurd:
        p, q, d, r = self.p, self.q, self.d, self.r
        norm = p * p - q * q * d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return QuadraticSurd._make(r * p, -r * q, d, norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.q == 0 and o.q != 0:
            return o._reciprocal() * Fraction(self.p, self.r)
        return self * o._reciprocal()

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL):
            f = Fraction(other)
            return self._reciprocal() * f
        return NotImplemented

    # -- floor and comparisons -------------------------------------------

    def __floor__(self) -> int:
        p, q, r = self.p, self.q, self.r
        if q == 0:
            return p // r
        t = isqrt(q * q * self.d)
        # q*sqrt(d) lies in [t, t+1) for q > 0, in (-t-1, -t) for q < 0,
        # and is irrational, so the value avoids the rational endpoints.
        if q > 0:
            return (p + t) // r
        return (p - t - 1) // r

    def _diff_sign(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticSurd):
            return (
                self.p == other.p
                and self.q == other.q
                and self.d == other.d
                and self.r == other.r
            )
        if isinstance(other, _RATIONAL):
            if self.q != 0:
                return False
            return Fraction(self.p, self.r) == Fraction(other)
        return NotImplemented

    def __lt__(self, other):
        return self._diff_sign(other) < 0

    def __le__(self, other):
        return self._diff_sign(other) <= 0

    def __gt__(self, other):
        return self._diff_sign(other) > 0

    def __ge__(self, other):
        return self._diff_sign(other) >= 0

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    # -- conversions -------------------------------------------------------

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def __repr__(self) -> str:
        return f"({self.p}{self.q:+}*sqrt({self.d}))/{self.r}"
