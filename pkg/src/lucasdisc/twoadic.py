"""2-adic valuations and power-of-two congruences for the Lucas-type family.

Writing n = r + m(k+1) with 0 <= r <= k, the Lucas-type term L(n) obeys
one congruence per residue class of r:

    r = 0:   L(n) ==  2 (-1)^m                      (mod 2^(k-2))
    r = 1:   L(n) == (4m+1) (-1)^m                  (mod 2^(k-1))
    r = 2:   L(n) == (4m^2+6m+3) (-1)^m             (mod 2^k)
    r >= 3:  L(n) == (-1)^m 2^(r-2) Q(m, r)         (mod 2^(k+r-2))

where Q(m, r) is the integer combination of binomials computed by
:func:`l_quantity`.  When nu2(Q(m,r)) = a < k this pins the exact
2-adic valuation nu2(L(n)) = r - 2 + a, the workhorse of the r >= 3
search campaign.

Valuations use the convention nu2(0) = infinity (``math.inf``).
"""

from __future__ import annotations

import math

from .sequences import binom_ext

__all__ = [
    "nu2",
    "kummer_nu2_binomial",
    "l_quantity",
    "l_quantity_factored",
    "lucas_congruence",
    "residue_decomposition",
    "disc_nu2",
]


def nu2(x: int) -> int | float:
    """Exponent of 2 in x; ``math.inf`` for x = 0."""
    if x == 0:
        return math.inf
    return (x & -x).bit_length() - 1


def kummer_nu2_binomial(n: int, m: int) -> int:
    """nu2(binom(n, m)) as the number of carries adding m and n-m in base 2.

    In base 2 the carry count collapses to popcounts:
    s(m) + s(n-m) - s(n) where s is the binary digit sum.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n, got n=%d m=%d" % (n, m))
    return m.bit_count() + (n - m).bit_count() - n.bit_count()


def l_quantity(m: int, r: int) -> int:
    """The binomial combination driving the r >= 3 congruence.

    Q(m, r) = 4*(binom(m+r+1, m) - binom(m+r-1, m-2))
                - (binom(m+r, m) - binom(m+r-2, m-2))

    with the extended convention that binomials with negative or
    undersized arguments vanish.  Exact integer arithmetic; this is the
    production route (the factored form below is a cross-check only).
    """
    if m < 0 or r < 0:
        raise ValueError("need m >= 0 and r >= 0, got m=%d r=%d" % (m, r))
    return 4 * (binom_ext(m + r + 1, m) - binom_ext(m + r - 1, m - 2)) - (
        binom_ext(m + r, m) - binom_ext(m + r - 2, m - 2)
    )


def l_quantity_factored(m: int, r: int) -> int:
    """Single-binomial form of :func:`l_quantity`, valid for m >= 2.

    Q(m, r) = binom(m+r-2, m-2) / (m (m-1) (r+1)) *
              (3 r^3 + 10 m r^2 + 8 m^2 r + 2 m r - 3 r + 8 m^2 - 8 m)

    The division is exact; an inexact division raises.
    """
    if m < 2:
        raise ValueError("factored form requires m >= 2, got m=%d" % (m,))
    if r < 0:
        raise ValueError("need r >= 0, got r=%d" % (r,))
    poly = (
        3 * r**3 + 10 * m * r**2 + 8 * m**2 * r + 2 * m * r - 3 * r + 8 * m**2 - 8 * m
    )
    num = binom_ext(m + r - 2, m - 2) * poly
    den = m * (m - 1) * (r + 1)
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError("factored form not integral at m=%d r=%d" % (m, r))
    return q


def _canonical(raw: int, exponent: int) -> int:
    """Representative of raw mod 2^exponent in [-2^(E-1), 2^(E-1))."""
    if exponent <= 0:
        return 0
    half = 1 << (exponent - 1)
    return ((raw + half) & ((half << 1) - 1)) - half


def lucas_congruence(k: int, m: int, r: int) -> tuple[int, int]:
    """Predicted residue of L(r + m(k+1)) and its modulus exponent E.

    Returns ``(residue, E)`` meaning L(n) == residue (mod 2^E) for
    n = r + m(k+1).  The residue is the signed representative in
    [-2^(E-1), 2^(E-1)); at k = 2, r = 0 the modulus is 2^0 and the
    congruence is vacuous, returned as (0, 0).
    """
    if k < 2:
        raise ValueError("need k >= 2, got k=%d" % (k,))
    if m < 0:
        raise ValueError("need m >= 0, got m=%d" % (m,))
    if not 0 <= r <= k:
        raise ValueError("need 0 <= r <= k, got r=%d k=%d" % (r, k))
    sign = -1 if m % 2 else 1
    if r == 0:
        raw, exponent = 2 * sign, k - 2
    elif r == 1:
        raw, exponent = (4 * m + 1) * sign, k - 1
    elif r == 2:
        raw, exponent = (4 * m * m + 6 * m + 3) * sign, k
    else:
        raw, exponent = sign * (l_quantity(m, r) << (r - 2)), k + r - 2
    return _canonical(raw, exponent), exponent


def residue_decomposition(n: int, k: int) -> tuple[int, int]:
    """Split n >= 0 as n = r + m(k+1) with 0 <= r <= k; returns (m, r)."""
    if n < 0:
        raise ValueError("need n >= 0, got n=%d" % (n,))
    if k < 2:
        raise ValueError("need k >= 2, got k=%d" % (k,))
    m, r = divmod(n, k + 1)
    return m, r


def disc_nu2(k: int) -> int:
    """nu2 of the absolute discriminant of x^k - x^(k-1) - ... - 1.

    Zero for even k; k - 1 for odd k.  Cross-checked against the exact
    big-integer discriminant in the test suite.
    """
    if k < 2:
        raise ValueError("need k >= 2, got k=%d" % (k,))
    return 0 if k % 2 == 0 else k - 1
