"""Discriminant arithmetic and the bound chain that pins the search space.

For g(x) = x^k - x^(k-1) - ... - 1 the absolute discriminant is

    delta(k) = (2^(k+1) k^k - (k+1)^(k+1)) / (k-1)^2,

an exact integer (the division is asserted).  Solving L(n) = delta(k)
forces n into a window of width 2.4 around k + (k-2) log2(k); a lower
bound for linear forms in logarithms caps k below 7e16 (hence n below
4e18); a 2-adic linear-forms bound tightens k below 7e7 for the
residue classes r in {1,2}; and for r >= 3 the surviving k cluster
within 300 of a power of two, m in a narrow band.  Each link of that
chain is computed here, high-precision where k is astronomically big
(double precision is only trusted for k up to ~1e8, where the window's
absolute error stays below 1e-5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import mpmath

__all__ = [
    "discriminant",
    "n_window",
    "matveev_lower_bound",
    "MatveevBound",
    "solve_matveev_k_bound",
    "bl_valuation_bound",
    "bl_crossover_k",
    "solve_bl_k_bound",
    "m_range",
    "localize_k_by_power2",
    "BoundProfile",
    "bound_profile",
]

_MP_PREC = 160


def discriminant(k: int) -> int:
    """Absolute discriminant of x^k - x^(k-1) - ... - 1, exact.

    delta(k) = (2^(k+1) k^k - (k+1)^(k+1)) / (k-1)^2.  The divisibility
    and positivity are asserted, not assumed.
    """
    if k < 2:
        raise ValueError("need k >= 2, got k=%d" % (k,))
    numerator = (1 << (k + 1)) * k**k - (k + 1) ** (k + 1)
    delta, rem = divmod(numerator, (k - 1) ** 2)
    if rem:
        raise AssertionError("discriminant numerator not divisible by (k-1)^2 at k=%d" % (k,))
    if delta <= 0:
        raise AssertionError("discriminant not positive at k=%d" % (k,))
    return delta


def n_window(k: int) -> tuple[float, float]:
    """Open interval that must contain n if L(n) = delta(k), for k > 200.

    Returns (lo, lo + 2.4) with lo = k + (k-2) log2(k) - 0.1, evaluated
    in double precision.  The absolute evaluation error is below 1e-5
    for k up to ~1e8, absorbed by the window's built-in slack; for
    larger k use the high-precision internal evaluation.
    """
    if k <= 200:
        raise ValueError("window derivation needs k > 200, got k=%d" % (k,))
    lo = k + (k - 2) * math.log2(k) - 0.1
    return lo, lo + 2.4


def _n_window_mp(k: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """High-precision window endpoints, for k far beyond double range."""
    with mpmath.workprec(_MP_PREC):
        center = k + (k - 2) * mpmath.log(k) / mpmath.log(2)
        tenth = mpmath.mpf(1) / 10
        return center - tenth, center + 23 * tenth


def matveev_lower_bound(t: int, B: float, A: Sequence[float]) -> float:
    """Lower bound -1.4 * 30^(t+3) * t^4.5 * (1 + log B) * prod(A) on
    log |Gamma| for a nonzero linear form Gamma in t logarithms.

    B bounds the coefficient heights (B >= 3 required here), each A_i
    bounds a logarithmic height and must be positive.
    """
    if t < 1:
        raise ValueError("need t >= 1, got t=%d" % (t,))
    if B < 3:
        raise ValueError("need B >= 3, got B=%r" % (B,))
    if len(A) != t:
        raise ValueError("need exactly t height bounds, got %d for t=%d" % (len(A), t))
    if any(a <= 0 for a in A):
        raise ValueError("height bounds must be positive")
    return -1.4 * 30 ** (t + 3) * t**4.5 * (1 + math.log(B)) * math.prod(A)


class MatveevBound(NamedTuple):
    k_max: int
    n_max: int


def _matveev_gap(k: int) -> mpmath.mpf:
    """(k/2) log 2 - 3.5e11 (log k)^2 log(3 k log k); negative while k survives."""
    logk = mpmath.log(k)
    return k * mpmath.log(2) / 2 - 3.5e11 * logk**2 * mpmath.log(3 * k * logk)


@lru_cache(maxsize=1)
def solve_matveev_k_bound() -> MatveevBound:
    """Largest k compatible with the aggregated linear-forms inequality,
    plus the n cap that window implies at that k.

    Bisects the sign change of (k/2) log 2 - 3.5e11 (log k)^2 log(3 k log k)
    in high precision.  Both outputs are hard caps used by the search
    campaigns (k below 7e16, n below 4e18).
    """
    with mpmath.workprec(_MP_PREC):
        lo, hi = 10**3, 10**20
        if not (_matveev_gap(lo) < 0 < _matveev_gap(hi)):
            raise AssertionError("bisection bracket invalid")
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _matveev_gap(mid) < 0:
                lo = mid
            else:
                hi = mid
        n_max = int(mpmath.floor(_n_window_mp(lo)[1]))
    return MatveevBound(k_max=lo, n_max=n_max)


def _bl_B(k: int) -> float:
    """Height parameter: max{log b' + log log 2 + 0.4, 10 log 2} with
    b' = (k + 6.4) / (5.4 log k)."""
    b_prime = (k + 6.4) / (5.4 * math.log(k))
    return max(math.log(b_prime) + math.log(math.log(2)) + 0.4, 10 * math.log(2))


def bl_valuation_bound(k: int, m: int, r: int) -> float:
    """Cap 1123 * B^2 * log(k) * log(k+1) on nu2 of the residue-class
    linear form for r in {1, 2}.

    The r in {1,2} branch only arises for even k > 200 and m >= 1 (and
    m below 3 k log k, always true on the search ranges); the bound
    itself depends only on k.
    """
    if k <= 200 or k % 2:
        raise ValueError("branch requires even k > 200, got k=%d" % (k,))
    if m < 1:
        raise ValueError("need m >= 1, got m=%d" % (m,))
    if r not in (1, 2):
        raise ValueError("branch covers r in {1,2}, got r=%d" % (r,))
    B = _bl_B(k)
    return 1123.0 * B * B * math.log(k) * math.log(k + 1)


@lru_cache(maxsize=1)
def bl_crossover_k() -> int:
    """Largest k where the flat 10 log 2 branch still dominates B.

    log b' + log log 2 + 0.4 grows through 10 log 2 just short of
    59000; below the returned k the valuation cap is the small-branch
    value, which already confines k.
    """
    lo, hi = 201, 10**6

    def gap(k: int) -> float:
        b_prime = (k + 6.4) / (5.4 * math.log(k))
        return math.log(b_prime) + math.log(math.log(2)) + 0.4 - 10 * math.log(2)

    if not (gap(lo) < 0 < gap(hi)):
        raise AssertionError("crossover bracket invalid")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=1)
def solve_bl_k_bound() -> int:
    """Largest k with k - 1 <= 1123 B(k)^2 log(k) log(k+1).

    Beyond this k the 2-adic valuation cap falls below k - 1 and the
    r in {1,2} case is impossible; the returned value sits below 7e7.
    """
    lo, hi = 202, 10**9

    def gap(k: int) -> float:
        B = _bl_B(k)
        return (k - 1) - 1123.0 * B * B * math.log(k) * math.log(k + 1)

    if not (gap(lo) < 0 < gap(hi)):
        raise AssertionError("bl bound bracket invalid")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo


def m_range(k_max: int = 70_000_000_000_000_000) -> tuple[int, int]:
    """Envelope of m = n // (k+1) over all k in (200, k_max] with n in
    the window.

    The per-k lower bound ((k-2) log2(k) - 0.1) / (k+1) and upper bound
    n_hi / (k+1) are both increasing in k, so the extremes sit at the
    endpoints; the upper end is widened outward by one as a
    conservative envelope (the extra m localizes to an empty k range
    anyway).
    """
    if k_max <= 201:
        raise ValueError("need k_max > 201, got %d" % (k_max,))
    with mpmath.workprec(_MP_PREC):
        log2 = mpmath.log(2)
        k = mpmath.mpf(201)
        low = ((k - 2) * mpmath.log(k) / log2 - mpmath.mpf(1) / 10) / (k + 1)
        m_min = int(mpmath.ceil(low))
        hi = _n_window_mp(k_max)[1] / (k_max + 1)
        m_max = int(mpmath.floor(hi)) + 1
    return m_min, m_max


def localize_k_by_power2(
    m: int,
    k_floor: int = 200,
    k_cap: int = 70_000_000_000_000_000,
) -> tuple[int, int]:
    """Open interval of k with |k - 2^m| < 300, clipped to (k_floor, k_cap).

    Returns exclusive bounds (lo, hi); empty when lo >= hi (the m = 57
    band clips away entirely at the 7e16 cap).
    """
    if m < 8:
        raise ValueError("need m >= 8, got m=%d" % (m,))
    lo = max((1 << m) - 300, k_floor)
    hi = min((1 << m) + 300, k_cap)
    return lo, hi


@dataclass(frozen=True)
class BoundProfile:
    """Search-space summary at one k: window in n, band in m, cap on a,
    plus the global k caps."""

    k: int
    n_lo: float
    n_hi: float
    m_lo: int
    m_hi: int
    a_max: int
    k_matveev_max: int
    k_bl_max: int


def bound_profile(k: int) -> BoundProfile:
    """Assemble the per-k bound profile (k > 200)."""
    n_lo, n_hi = n_window(k)
    m_lo = math.ceil(((k - 2) * math.log2(k) - 0.1) / (k + 1))
    m_hi = math.floor(n_hi / (k + 1))
    a_max = math.floor(6 * math.log(k) + 2)
    matveev = solve_matveev_k_bound()
    return BoundProfile(
        k=k,
        n_lo=n_lo,
        n_hi=n_hi,
        m_lo=m_lo,
        m_hi=m_hi,
        a_max=a_max,
        k_matveev_max=matveev.k_max,
        k_bl_max=solve_bl_k_bound(),
    )
