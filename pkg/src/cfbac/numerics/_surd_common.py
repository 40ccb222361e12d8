"""Normalization helpers shared by the pure-Python and compiled surd kernels.

These run on the cold path (construction from raw integers); the per-step
field operations live in the kernels themselves.
"""

from __future__ import annotations

from math import gcd, isqrt

from ..errors import DomainError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def squarefree_decompose(d: int) -> tuple[int, int]:
    """Write d = s * f**2 with s square-free; returns (s, f).

    Trial division runs to d**(1/3): any remaining square part must be a
    full perfect square, which isqrt detects.  Cost is O(d**(1/3)), fine
    for the radicands this library produces (discriminants of small
    Moebius products).
    """
    if d < 0:
        raise DomainError("radicand must be non-negative")
    if d in (0, 1):
        return d, 1
    s, f = d, 1
    for p in _SMALL_PRIMES:
        p2 = p * p
        while s % p2 == 0:
            s //= p2
            f *= p
    i = 41
    while i * i * i <= s:
        i2 = i * i
        while s % i2 == 0:
            s //= i2
            f *= i
        i += 2
    root = isqrt(s)
    if root * root == s:
        return 1, f * root
    return s, f


def normalize_parts(p: int, q: int, d: int, r: int) -> tuple[int, int, int, int]:
    """Canonicalize (p + q*sqrt(d))/r: d square-free, r > 0, gcd(p,q,r) = 1.

    Equal values get equal tuples: square factors of d move into q,
    d collapses to 0 whenever the value is rational.
    """
    if r == 0:
        raise ZeroDivisionError("surd denominator is zero")
    s, f = squarefree_decompose(d)
    q *= f
    if s <= 1:
        p, q, s = p + q * s, 0, 0
    if q == 0:
        s = 0
    if r < 0:
        p, q, r = -p, -q, -r
    g = gcd(gcd(abs(p), abs(q)), r)
    if g > 1:
        p //= g
        q //= g
        r //= g
    return p, q, s, r
