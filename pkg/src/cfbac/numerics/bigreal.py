"""Directed-rounding interval reals on top of mpmath's libmp primitives.

A BigReal is a pair of arbitrary-precision binary floats [lo, hi] that is
guaranteed to contain the exact value it stands for; every operation rounds
lo down and hi up, so enclosures never lie.  Working precision is tracked
in decimal digits.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import libmp
from mpmath.libmp import (
    from_int,
    from_rational,
    from_str,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_floor,
    mpf_mul,
    mpf_neg,
    mpf_pi,
    mpf_sqrt,
    mpf_sub,
    to_int,
    to_str,
)

from ..errors import UNDECIDABLE, DomainError
from .surd import QuadraticSurd

_DOWN = "f"  # toward -inf
_UP = "c"  # toward +inf

DEFAULT_DIGITS = 64
MAX_DIGITS = 256


def _prec(digits: int) -> int:
    return int(digits * 3.3219280948873626) + 12


def _tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    value = Fraction(int(man))
    if exp >= 0:
        value *= 1 << exp
    else:
        value /= 1 << -exp
    return -value if sign else value


class BigReal:
    """Interval real [lo, hi] with working precision in decimal digits."""

    __slots__ = ("lo", "hi", "digits")

    def __init__(self, lo, hi, digits: int):
        if mpf_cmp(lo, hi) > 0:
            raise ValueError("inverted interval endpoints")
        self.lo = lo
        self.hi = hi
        self.digits = digits

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_fraction(cls, value, digits: int = DEFAULT_DIGITS) -> BigReal:
        f = Fraction(value)
        p = _prec(digits)
        return cls(
            from_rational(f.numerator, f.denominator, p, _DOWN),
            from_rational(f.numerator, f.denominator, p, _UP),
            digits,
        )

    @classmethod
    def from_decimal(cls, text: str, digits: int = DEFAULT_DIGITS) -> BigReal:
        p = _prec(digits)
        return cls(from_str(text, p, _DOWN), from_str(text, p, _UP), digits)

    @classmethod
    def from_exact(cls, value, digits: int = DEFAULT_DIGITS) -> BigReal:
        """Enclosure of a Fraction or QuadraticSurd."""
        if isinstance(value, BigReal):
            return value
        if isinstance(value, QuadraticSurd) and value.q != 0:
            p = _prec(digits)
            dt = from_int(value.d)
            qt = from_int(value.q)
            rt = from_int(value.r)
            pt = from_int(value.p)
            root_lo = mpf_sqrt(dt, p, _DOWN)
            root_up = mpf_sqrt(dt, p, _UP)
            if value.q < 0:
                root_lo, root_up = root_up, root_lo
            lo = mpf_div(mpf_add(pt, mpf_mul(qt, root_lo, p, _DOWN), p, _DOWN), rt, p, _DOWN)
            hi = mpf_div(mpf_add(pt, mpf_mul(qt, root_up, p, _UP), p, _UP), rt, p, _UP)
            return cls(lo, hi, digits)
        if isinstance(value, QuadraticSurd):
            value = value.as_fraction()
        return cls.from_fraction(value, digits)

    @classmethod
    def pi(cls, digits: int = DEFAULT_DIGITS) -> BigReal:
        p = _prec(digits)
        return cls(mpf_pi(p, _DOWN), mpf_pi(p, _UP), digits)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> BigReal | None:
        if isinstance(other, BigReal):
            return other
        if isinstance(other, (int, Fraction, QuadraticSurd)):
            return BigReal.from_exact(other, self.digits)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        digits = max(self.digits, o.digits)
        p = _prec(digits)
        return BigReal(
            mpf_add(self.lo, o.lo, p, _DOWN), mpf_add(self.hi, o.hi, p, _UP), digits
        )

    __radd__ = __add__

    def __neg__(self):
        return BigReal(mpf_neg(self.hi), mpf_neg(self.lo), self.digits)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        digits = max(self.digits, o.digits)
        p = _prec(digits)
        return BigReal(
            mpf_sub(self.lo, o.hi, p, _DOWN), mpf_sub(self.hi, o.lo, p, _UP), digits
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        digits = max(self.digits, o.digits)
        p = _prec(digits)
        pairs = (
            (self.lo, o.lo),
            (self.lo, o.hi),
            (self.hi, o.lo),
            (self.hi, o.hi),
        )
        los = [mpf_mul(a, b, p, _DOWN) for a, b in pairs]
        his = [mpf_mul(a, b, p, _UP) for a, b in pairs]
        return BigReal(_min_mpf(los), _max_mpf(his), digits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.contains_zero():
            raise ZeroDivisionError("interval denominator contains zero")
        digits = max(self.digits, o.digits)
        p = _prec(digits)
        pairs = (
            (self.lo, o.lo),
            (self.lo, o.hi),
            (self.hi, o.lo),
            (self.hi, o.hi),
        )
        los = [mpf_div(a, b, p, _DOWN) for a, b in pairs]
        his = [mpf_div(a, b, p, _UP) for a, b in pairs]
        return BigReal(_min_mpf(los), _max_mpf(his), digits)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sqrt(self) -> BigReal:
        """Interval square root; a lo endpoint below zero is clipped to 0.

        Clipping is sound only because every value this library takes roots
        of is non-negative by theory; an entirely negative enclosure is a
        real domain error.
        """
        if mpf_cmp(self.hi, libmp.fzero) < 0:
            raise DomainError("square root of a negative enclosure")
        lo = self.lo if mpf_cmp(self.lo, libmp.fzero) >= 0 else libmp.fzero
        p = _prec(self.digits)
        return BigReal(mpf_sqrt(lo, p, _DOWN), mpf_sqrt(self.hi, p, _UP), self.digits)

    def __abs__(self):
        if self.sign_or_none() == -1:
            return -self
        if self.contains_zero():
            hi = _max_mpf([mpf_abs(self.lo), mpf_abs(self.hi)])
            return BigReal(libmp.fzero, hi, self.digits)
        return self

    # -- queries -----------------------------------------------------------

    def contains_zero(self) -> bool:
        return mpf_cmp(self.lo, libmp.fzero) <= 0 and mpf_cmp(self.hi, libmp.fzero) >= 0

    def is_exact_zero(self) -> bool:
        return self.lo == libmp.fzero and self.hi == libmp.fzero

    def sign_or_none(self) -> int | None:
        """Certified sign of the true value, or None when undecidable."""
        if mpf_cmp(self.lo, libmp.fzero) > 0:
            return 1
        if mpf_cmp(self.hi, libmp.fzero) < 0:
            return -1
        if self.is_exact_zero():
            return 0
        return None

    def floor_or_none(self) -> int | None:
        """Certified floor of the true value, or None if the enclosure straddles."""
        n = to_int(mpf_floor(self.lo))
        # decided iff hi < n+1, or the interval is the exact integer n+1
        hi_vs_next = mpf_cmp(self.hi, from_int(n + 1))
        if hi_vs_next < 0:
            return n
        if hi_vs_next == 0 and mpf_cmp(self.lo, self.hi) == 0:
            return n + 1
        return None

    def endpoints_as_fractions(self) -> tuple[Fraction, Fraction]:
        return _tuple_to_fraction(self.lo), _tuple_to_fraction(self.hi)

    def contains_exact(self, value) -> bool:
        lo, hi = self.endpoints_as_fractions()
        return lo <= value <= hi

    def width_fraction(self) -> Fraction:
        lo, hi = self.endpoints_as_fractions()
        return hi - lo

    def midpoint_str(self, dps: int | None = None) -> str:
        mid = mpf_div(mpf_add(self.lo, self.hi), from_int(2), _prec(self.digits), "n")
        return to_str(mid, dps if dps is not None else self.digits)

    def __float__(self) -> float:
        return (libmp.to_float(self.lo) + libmp.to_float(self.hi)) / 2

    def __repr__(self) -> str:
        return f"~{self.midpoint_str()}@{self.digits}"


def _min_mpf(ts):
    best = ts[0]
    for t in ts[1:]:
        if mpf_cmp(t, best) < 0:
            best = t
    return best


def _max_mpf(ts):
    best = ts[0]
    for t in ts[1:]:
        if mpf_cmp(t, best) > 0:
            best = t
    return best


def floor_verified(x, max_precision: int = MAX_DIGITS, recompute=None):
    """Certified floor of an enclosure, escalating precision when possible.

    Without ``recompute`` a single attempt is made (an interval carries no
    more information than it has).  With ``recompute(digits) -> BigReal``
    the working precision doubles per round up to ``max_precision``; if the
    enclosure still straddles an integer, UNDECIDABLE is returned and the
    caller must supply an exact representation or a better source.
    """
    if isinstance(x, (int, Fraction, QuadraticSurd)):
        return floor_exact_dispatch(x)
    digits = x.digits
    if max_precision < digits:
        raise DomainError("max_precision below the enclosure's working precision")
    while True:
        n = x.floor_or_none()
        if n is not None:
            return n
        if recompute is None or digits >= max_precision:
            return UNDECIDABLE
        digits = min(2 * digits, max_precision)
        x = recompute(digits)


def floor_exact_dispatch(x) -> int:
    import math

    return math.floor(x)
