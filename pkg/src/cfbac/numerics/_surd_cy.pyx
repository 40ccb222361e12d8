# cython: language_level=3
"""Compiled quadratic surd kernel.

Mirror of ``_surd_py.QuadraticSurd``; any semantic change there must land
here too (tests/test_numerics.py cross-checks the two on random inputs).
"""

import math
from fractions import Fraction
from math import gcd, isqrt

from ..errors import DistinctRadicands
from ._surd_common import normalize_parts

_RATIONAL = (int, Fraction)


cdef class QuadraticSurd:
    """Exact real (p + q*sqrt(d))/r with integer parts and square-free d.

    Invariants: r > 0, gcd(p, q, r) = 1, d square-free, and q == 0 iff the
    value is rational (then d == 0).  Field operations stay inside one
    quadratic field Q(sqrt(d)); mixing distinct radicands raises
    DistinctRadicands.  Values are immutable and hashable.
    """

    cdef readonly object p
    cdef readonly object q
    cdef readonly object d
    cdef readonly object r

    def __init__(self, p, q, d, r=1):
        p, q, d, r = normalize_parts(int(p), int(q), int(d), int(r))
        self.p = p
        self.q = q
        self.d = d
        self.r = r

    @staticmethod
    cdef QuadraticSurd make(object p, object q, object d, object r):
        cdef QuadraticSurd self = QuadraticSurd.__new__(QuadraticSurd)
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
    def _make(cls, p, q, d, r):
        return QuadraticSurd.make(p, q, d, r)

    @classmethod
    def from_rational(cls, value):
        f = Fraction(value)
        return QuadraticSurd.make(f.numerator, 0, 0, f.denominator)

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self):
        return self.q == 0

    def as_fraction(self):
        if self.q != 0:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.p, self.r)

    cpdef int sign(self):
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

    def conjugate(self):
        return QuadraticSurd.make(self.p, -self.q, self.d, self.r)

    # -- arithmetic ------------------------------------------------------

    cdef QuadraticSurd coerce(self, object other):
        cdef QuadraticSurd o
        if isinstance(other, QuadraticSurd):
            o = <QuadraticSurd> other
            if self.q != 0 and o.q != 0 and self.d != o.d:
                raise DistinctRadicands(f"cannot mix sqrt({self.d}) with sqrt({o.d})")
            return o
        if isinstance(other, _RATIONAL):
            f = Fraction(other)
            return QuadraticSurd.make(f.numerator, 0, 0, f.denominator)
        return None

    def __add__(self, other):
        cdef QuadraticSurd o = self.coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticSurd.make(
            self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, d, self.r * o.r
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return QuadraticSurd.make(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        cdef QuadraticSurd o = self.coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticSurd.make(
            self.p * o.r - o.p * self.r, self.q * o.r - o.q * self.r, d, self.r * o.r
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        cdef QuadraticSurd o = self.coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticSurd.make(
            self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d, self.r * o.r
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    cdef QuadraticSurd reciprocal(self):
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return QuadraticSurd.make(self.r * self.p, -self.r * self.q, self.d, norm)

    def _reciprocal(self):
        return self.reciprocal()

    def __truediv__(self, other):
        cdef QuadraticSurd a
        cdef QuadraticSurd o
        if isinstance(self, QuadraticSurd):
            a = <QuadraticSurd> self
            o = a.coerce(other)
            if o is None:
                return NotImplemented
            if a.q == 0 and o.q != 0:
                return o.reciprocal() * Fraction(a.p, a.r)
            return a * o.reciprocal()
        # other / self with self a surd
        a = <QuadraticSurd> other
        if isinstance(self, _RATIONAL):
            return a.reciprocal() * Fraction(self)
        return NotImplemented

    # -- floor and comparisons -------------------------------------------

    def __floor__(self):
        p, q, r = self.p, self.q, self.r
        if q == 0:
            return p // r
        t = isqrt(q * q * self.d)
        # q*sqrt(d) lies in [t, t+1) for q > 0, in (-t-1, -t) for q < 0,
        # and is irrational, so the value avoids the rational endpoints.
        if q > 0:
            return (p + t) // r
        return (p - t - 1) // r

    def __richcmp__(self, other, int op):
        cdef QuadraticSurd o
        if isinstance(other, QuadraticSurd):
            o = <QuadraticSurd> other
            if op == 2:  # ==
                return self.p == o.p and self.q == o.q and self.d == o.d and self.r == o.r
            if op == 3:  # !=
                return not (self.p == o.p and self.q == o.q and self.d == o.d and self.r == o.r)
        elif isinstance(other, _RATIONAL):
            if op == 2:
                return self.q == 0 and Fraction(self.p, self.r) == Fraction(other)
            if op == 3:
                return not (self.q == 0 and Fraction(self.p, self.r) == Fraction(other))
        else:
            return NotImplemented
        s = (<QuadraticSurd> (self - other)).sign()
        if op == 0:
            return s < 0
        if op == 1:
            return s <= 0
        if op == 4:
            return s > 0
        if op == 5:
            return s >= 0
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    # -- conversions -------------------------------------------------------

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def __repr__(self):
        return f"({self.p}{self.q:+}*sqrt({self.d}))/{self.r}"
