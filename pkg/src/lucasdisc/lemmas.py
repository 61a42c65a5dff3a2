"""Named invariant suites tying the library's pieces to each other.

Each suite re-derives one structural fact about the k-generalized
sequences, their dominant roots, the 2-adic congruences, or the
discriminant, and checks the implementation against it on a small
configurable grid.  A clean run returns no ``Failure`` records; the
``verify-lemmas`` CLI subcommand prints one pass/fail line per suite.

The grids scale with a single ``scale`` knob (1 = quick smoke, larger
values widen every range).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .sequences import (
    FIBONACCI,
    LUCAS,
    SeqParams,
    cooper_howard_fib,
    lucas_from_fib,
    shift_identity_check,
    term,
    term_iter,
)
from .twoadic import (
    l_quantity,
    l_quantity_factored,
    lucas_congruence,
    nu2,
    residue_decomposition,
    disc_nu2,
)
from .roots import (
    binet_error_check,
    binet_vs_power2_check,
    dominant_root,
    gk_sign,
    growth_bounds_check,
)
from .bounds import discriminant, n_window

__all__ = ["Failure", "SUITES", "run_suite", "run_all"]


@dataclass(frozen=True)
class Failure:
    suite: str
    params: dict = field(default_factory=dict)
    detail: str = ""


def _fail(suite: str, detail: str, **params) -> Failure:
    return Failure(suite=suite, params=params, detail=detail)


def check_recurrence(scale: int = 1) -> list[Failure]:
    """Every term equals the sum of its k predecessors (both families)."""
    out = []
    k_hi = 4 + 4 * scale
    n_hi = 30 * scale
    for family in (FIBONACCI, LUCAS):
        for k in range(2, k_hi + 1):
            params = SeqParams(k=k, family=family)
            seq = {}
            for n, value in term_iter(params, params.min_index):
                if n > n_hi:
                    break
                seq[n] = value
                if n >= 2 and value != sum(seq[n - j] for j in range(1, k + 1)):
                    out.append(
                        _fail("recurrence", "term != sum of k predecessors", k=k, n=n, family=family)
                    )
                if value != term(params, n):
                    out.append(_fail("recurrence", "term() disagrees with term_iter()", k=k, n=n, family=family))
    return out


def check_doubling_and_bridges(scale: int = 1) -> list[Failure]:
    """Doubling shift, Lucas-from-Fibonacci bridge, and power-of-two head."""
    out = []
    k_hi = 4 + 4 * scale
    n_hi = 25 * scale
    for k in range(2, k_hi + 1):
        lucas = SeqParams(k=k, family=LUCAS)
        for n in range(3, n_hi + 1):
            if n - (k + 1) >= lucas.min_index and not shift_identity_check(k, n):
                out.append(_fail("doubling_shift", "L(n) != 2L(n-1) - L(n-k-1)", k=k, n=n))
        for n in range(0, n_hi + 1):
            if lucas_from_fib(k, n) != term(lucas, n):
                out.append(_fail("doubling_shift", "2F(n+1) - F(n) != L(n)", k=k, n=n))
        for n in range(2, k + 1):
            if term(lucas, n) != 3 * (1 << (n - 2)):
                out.append(_fail("doubling_shift", "head term != 3*2^(n-2)", k=k, n=n))
        if term(lucas, k + 1) != 3 * (1 << (k - 1)) - 2:
            out.append(_fail("doubling_shift", "L(k+1) != 3*2^(k-1) - 2", k=k, n=k + 1))
    return out


def check_closed_form(scale: int = 1) -> list[Failure]:
    """Signed-binomial closed form reproduces the Fibonacci branch."""
    out = []
    k_hi = 4 + 4 * scale
    n_hi = 40 * scale
    for k in range(2, k_hi + 1):
        params = SeqParams(k=k, family=FIBONACCI)
        for n in range(0, n_hi + 1):
            if cooper_howard_fib(k, n) != term(params, n):
                out.append(_fail("closed_form", "binomial closed form mismatch", k=k, n=n))
    return out


def check_parity_period(scale: int = 1) -> list[Failure]:
    """Lucas parity is periodic with period k + 1."""
    out = []
    k_hi = 4 + 6 * scale
    periods = 4 * scale
    for k in range(2, k_hi + 1):
        params = SeqParams(k=k, family=LUCAS)
        values = {}
        limit = (periods + 1) * (k + 1)
        for n, value in term_iter(params, 0):
            if n > limit:
                break
            values[n] = value
        for n in range(0, limit - (k + 1) + 1):
            if (values[n] - values[n + k + 1]) % 2:
                out.append(_fail("parity_period", "parity not (k+1)-periodic", k=k, n=n))
    return out


def check_congruence_table(scale: int = 1) -> list[Failure]:
    """Exact Lucas terms satisfy the residue-class congruences mod 2^E."""
    out = []
    k_hi = 8 + 4 * scale
    m_hi = 2 + 2 * scale
    for k in range(2, k_hi + 1):
        params = SeqParams(k=k, family=LUCAS)
        for m in range(0, m_hi + 1):
            for r in range(0, k + 1):
                n = m * (k + 1) + r
                residue, exponent = lucas_congruence(k, m, r)
                if exponent <= 0:
                    continue
                if (term(params, n) - residue) % (1 << exponent):
                    out.append(
                        _fail("congruence_table", "L(n) != residue mod 2^E", k=k, m=m, r=r, n=n)
                    )
    return out


def check_valuation_law(scale: int = 1) -> list[Failure]:
    """nu2(L(n)) == r - 2 + nu2(Q(m, r)) when the modulus can see it."""
    out = []
    k_hi = 8 + 4 * scale
    m_hi = 2 + 2 * scale
    for k in range(4, k_hi + 1):
        params = SeqParams(k=k, family=LUCAS)
        for m in range(1, m_hi + 1):
            for r in range(3, k + 1):
                q = l_quantity(m, r)
                if q == 0:
                    continue
                a = nu2(q)
                # The congruence holds mod 2^(k+r-2); it pins the
                # valuation only while r - 2 + a < k + r - 2.
                if a >= k:
                    continue
                n = m * (k + 1) + r
                if nu2(term(params, n)) != r - 2 + a:
                    out.append(_fail("valuation_law", "nu2(L(n)) != r - 2 + nu2(Q)", k=k, m=m, r=r))
    return out


def check_quantity_factorization(scale: int = 1) -> list[Failure]:
    """Binomial and factored forms of the congruence quantity agree."""
    out = []
    hi = 8 + 8 * scale
    for m in range(2, hi + 1):
        for r in range(3, hi + 1):
            if l_quantity(m, r) != l_quantity_factored(m, r):
                out.append(_fail("quantity_factorization", "factored form mismatch", m=m, r=r))
    return out


def check_root_enclosures(scale: int = 1) -> list[Failure]:
    """Dominant-root enclosures bracket a sign change inside (2 - 2^(1-k), 2)."""
    out = []
    k_hi = 4 + 8 * scale
    for k in range(2, k_hi + 1):
        enc = dominant_root(k)
        if not (gk_sign(k, enc.lo) < 0 < gk_sign(k, enc.hi)):
            out.append(_fail("root_enclosure", "no sign change across enclosure", k=k))
        if not (2 - (2 ** (1 - k)) < enc.lo < enc.hi < 2):
            out.append(_fail("root_enclosure", "enclosure outside (2 - 2^(1-k), 2)", k=k))
        if enc.width() * (1 << enc.precision_bits) > 1:
            out.append(_fail("root_enclosure", "width above 2^-precision", k=k))
        for n in (2, 5, 9 + 2 * scale):
            if not growth_bounds_check(k, n):
                out.append(_fail("root_enclosure", "growth bounds fail", k=k, n=n))
            if not binet_error_check(k, n):
                out.append(_fail("root_enclosure", "dominant-term error above 3/2", k=k, n=n))
        if not binet_vs_power2_check(k, 0):
            out.append(_fail("root_enclosure", "power-of-two comparison fails", k=k, n=0))
    return out


def check_window_brackets_crossing(scale: int = 1) -> list[Failure]:
    """L(n) crosses |disc| strictly inside the admissible n-window (k > 200).

    Checks the defining property of the window: terms at or below its
    floor are still smaller than |disc|, terms at or above its ceiling
    already exceed it.
    """
    out = []
    ks = [201, 202, 203, 210][: 2 + scale]
    for k in ks:
        delta = discriminant(k)
        lo, hi = n_window(k)
        params = SeqParams(k=k, family=LUCAS)
        floor_n = int(lo)
        ceil_n = int(hi) + 1
        last = None
        for n, value in term_iter(params, 0):
            if n > ceil_n:
                break
            last = value
            if n <= floor_n and value >= delta:
                out.append(_fail("window_brackets", "term at/below window floor >= |disc|", k=k, n=n))
                break
        if last is not None and last <= delta:
            out.append(_fail("window_brackets", "term above window ceiling <= |disc|", k=k, n=ceil_n))
    return out


def check_small_k_cross_validation(scale: int = 1) -> list[Failure]:
    """Exhaustive equality walk agrees with the congruence filters (5 <= k <= 16).

    Walks every Lucas term up to the |disc| crossing, asserts the
    congruence residue for its (m, r) class, and confirms the 2-adic
    valuation split: any actual equality would have to pass the filters,
    and no equality exists in this range.
    """
    del scale  # fixed range by design
    out = []
    for k in range(5, 17):
        delta = discriminant(k)
        params = SeqParams(k=k, family=LUCAS)
        for n, value in term_iter(params, 0):
            if n >= 2 and value > delta:
                break
            m, r = residue_decomposition(n, k)
            residue, exponent = lucas_congruence(k, m, r)
            if exponent > 0 and (value - residue) % (1 << exponent):
                out.append(_fail("small_k_cross_validation", "congruence violated", k=k, n=n))
            if value == delta:
                out.append(_fail("small_k_cross_validation", "unexpected equality with |disc|", k=k, n=n))
        if disc_nu2(k) != nu2(delta):
            out.append(_fail("small_k_cross_validation", "discriminant valuation mismatch", k=k))
    return out


SUITES = {
    "recurrence": check_recurrence,
    "doubling_shift": check_doubling_and_bridges,
    "closed_form": check_closed_form,
    "parity_period": check_parity_period,
    "congruence_table": check_congruence_table,
    "valuation_law": check_valuation_law,
    "quantity_factorization": check_quantity_factorization,
    "root_enclosure": check_root_enclosures,
    "window_brackets": check_window_brackets_crossing,
    "small_k_cross_validation": check_small_k_cross_validation,
}


def run_suite(name: str, scale: int = 1) -> list[Failure]:
    if name not in SUITES:
        raise ValueError("unknown suite %r; expected one of %s" % (name, sorted(SUITES)))
    if scale < 1:
        raise ValueError("need scale >= 1, got %d" % (scale,))
    return SUITES[name](scale)


def run_all(scale: int = 1) -> dict[str, list[Failure]]:
    """Run every suite; a clean result maps each name to an empty list."""
    return {name: run_suite(name, scale) for name in SUITES}
