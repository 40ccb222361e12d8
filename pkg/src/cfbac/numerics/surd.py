"""Quadratic surd type with kernel selection, plus exact square roots.

The hot field operations live in a kernel that exists twice: a Cython
extension (``_surd_cy``) and a pure-Python twin (``_surd_py``).  The
compiled one is used when present; ``CFBAC_PURE_PYTHON=1`` forces the
fallback (benchmarks/bench_surd.py compares the two).
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from math import isqrt

from ..errors import DistinctRadicands, DomainError

if os.environ.get("CFBAC_PURE_PYTHON"):
    from ._surd_py import QuadraticSurd

    KERNEL = "python"
else:
    try:
        from ._surd_cy import QuadraticSurd  # type: ignore[no-redef]

        KERNEL = "cython"
    except ImportError:
        from ._surd_py import QuadraticSurd  # type: ignore[no-redef]

        KERNEL = "python"

__all__ = [
    "QuadraticSurd",
    "KERNEL",
    "surd_normalize",
    "floor_exact",
    "sqrt_rational",
    "sqrt_exact",
]


def surd_normalize(p: int, q: int, d: int, r: int) -> QuadraticSurd:
    """Canonical surd (p + q*sqrt(d))/r; equal values get equal representations."""
    return QuadraticSurd(p, q, d, r)


def floor_exact(x: QuadraticSurd | Fraction | int) -> int:
    """Floor decided purely by integer arithmetic (isqrt brackets q*sqrt(d))."""
    return math.floor(x)


def _rational_sqrt(f: Fraction) -> Fraction | None:
    """sqrt(f) when it is rational, else None."""
    if f < 0:
        return None
    np, dp = isqrt(f.numerator), isqrt(f.denominator)
    if np * np == f.numerator and dp * dp == f.denominator:
        return Fraction(np, dp)
    return None


def sqrt_rational(f: Fraction | int) -> QuadraticSurd:
    """Exact sqrt of a non-negative rational as a surd: sqrt(n/m) = sqrt(n*m)/m."""
    f = Fraction(f)
    if f < 0:
        raise DomainError("square root of a negative rational")
    return QuadraticSurd(0, 1, f.numerator * f.denominator, f.denominator)


def sqrt_exact(x):
    """Exact non-negative square root within the operand's quadratic field.

    Rational input always works (the root may introduce a radicand).  For a
    surd input the root must itself lie in Q(sqrt(d)) -- true for every
    discriminant this library takes roots of along orbits -- otherwise the
    value would need a second radical and DistinctRadicands is raised.
    """
    if isinstance(x, (int, Fraction)):
        return sqrt_rational(x)
    if x.q == 0:
        return sqrt_rational(Fraction(x.p, x.r))
    if x.sign() < 0:
        raise DomainError("square root of a negative surd")
    a0 = Fraction(x.p, x.r)
    a1 = Fraction(x.q, x.r)
    # (b0 + b1*sqrt(d))**2 = a0 + a1*sqrt(d)  =>  b0**2 = (a0 +- sqrt(h))/2
    h = _rational_sqrt(a0 * a0 - a1 * a1 * x.d)
    if h is not None:
        for b0sq in ((a0 + h) / 2, (a0 - h) / 2):
            b0 = _rational_sqrt(b0sq)
            if b0 is not None and b0 != 0:
                b1 = a1 / (2 * b0)
                den = (b0.denominator * b1.denominator) // math.gcd(
                    b0.denominator, b1.denominator
                )
                root = QuadraticSurd(int(b0 * den), int(b1 * den), x.d, den)
                if root.sign() < 0:
                    root = -root
                return root
    raise DistinctRadicands(f"sqrt of {x!r} is not in Q(sqrt({x.d}))")
