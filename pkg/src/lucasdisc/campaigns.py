"""Exhaustive search campaigns ruling out Lucas/discriminant coincidences.

Each campaign scans a slice of the parameter space for solutions of
L(k, n) == |disc(k)|, where L(k, .) is the k-generalized Lucas sequence
and disc(k) the discriminant of x^k - x^(k-1) - ... - x - 1.  Writing
n = m*(k+1) + r, the residue r decides which congruence for L(k, n)
modulo a power of two applies, and the campaigns split along it:

* ``campaign_small``   -- exhaustive equality walk for 2 <= k <= 200;
* ``campaign_case0``   -- r == 0, settled by a 2-adic valuation clash;
* ``campaign_case12``  -- r in {1, 2}, even k, scan over k with a
  modular test on the surviving (k, n) window pairs;
* ``campaign_case3``   -- r >= 3, odd k localized near powers of two,
  a two-filter scan over (a, m, k) triples.

Determinism policy: every count, candidate, and survivor reported here
is decided by exact integer arithmetic or by interval/extended-precision
evaluation with an explicit safety margin.  Floating point (numpy) is
used only to *propose* candidates inside a widened window; proposals are
re-checked exactly, so reports are reproducible across shard layouts and
worker counts.  Reports from disjoint shards merge into the same bytes
as an unsharded run (timing aside).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np
import mpmath

from .sequences import LUCAS, SeqParams, term_iter
from .twoadic import l_quantity, lucas_congruence, nu2
from .bounds import discriminant, localize_k_by_power2, m_range
from .roots import MAX_PRECISION_BITS, PrecisionError

__all__ = [
    "CandidatePair",
    "CampaignReport",
    "CAMPAIGN_NAMES",
    "campaign_small",
    "campaign_case0",
    "campaign_case12",
    "campaign_case3",
    "shard",
    "merge_reports",
    "report_to_jsonl",
]

#: Hard cap on k for the r >= 3 campaign (beyond it the linear-forms
#: bound already excludes solutions).
K_CAP = 70_000_000_000_000_000

#: Largest value of a - 1 = k - r that the r >= 3 campaign must consider
#: (a is capped by the carry count of the binomials involved).
A_MINUS1_MAX = 233

# Chunk length for the vectorized k-scan (keeps peak memory ~50 MB).
_CHUNK = 1 << 19

# Widening applied to the float window test before exact confirmation.
_FLOAT_SLACK = 1e-5

# Cached congruence quantities keep this many low bits; enough for the
# default moduli (a + extra <= 234 + 150 + headroom).
_Q_CACHE_BITS = 1024

_Q_CACHE: dict[tuple[int, int], tuple[int, int]] = {}


@dataclass(frozen=True)
class CandidatePair:
    """One (k, n) pair that reached a reportable stage of a campaign."""

    k: int
    n: int
    r: int
    m: int
    a: int | None
    stage: str
    verdict: str
    stage_flags: frozenset[str] = frozenset()


@dataclass
class CampaignReport:
    campaign: str
    ranges: dict
    stage_counts: list[tuple[str, int]]
    survivors: list[CandidatePair]
    candidates: list[CandidatePair]
    elapsed: float
    notes: list[str] = field(default_factory=list)
    extras: dict = field(default_factory=dict)


CAMPAIGN_NAMES = ("small", "case0", "case12", "case3")


def _shard_args(shard: tuple[int, int] | None) -> tuple[int, int]:
    if shard is None:
        return 0, 1
    piece, of = shard
    if of < 1 or not 0 <= piece < of:
        raise ValueError("bad shard (%r, %r): need 0 <= piece < of" % (piece, of))
    return piece, of


def _window_member_exact(k: int, n: int, start_bits: int = 120) -> bool:
    """Decide n's membership in the open admissible window for k exactly.

    The window is (w, w + 2.4) with w = k + (k - 2)*log2(k) - 1/10.  The
    defect d = n - w is evaluated in escalating precision until it clears
    the safety margin 2^-(bits/2) on one side; d == 0 or d == 2.4 cannot
    occur for integer n (log2(k) is irrational unless k is a power of
    two, and then d - {0, 2.4} is a nonzero rational), so this
    terminates.
    """
    bits = start_bits
    while bits <= MAX_PRECISION_BITS:
        with mpmath.workprec(bits):
            log2k = mpmath.log(k) / mpmath.log(2)
            defect = (n - k) + mpmath.mpf(1) / 10 - (k - 2) * log2k
            width = mpmath.mpf(24) / 10
            eps = mpmath.ldexp(1, -(bits // 2))
            if eps < defect < width - eps:
                return True
            if defect < -eps or defect > width + eps:
                return False
        bits *= 2
    raise PrecisionError(
        "window membership for k=%d n=%d undecided at %d bits" % (k, n, MAX_PRECISION_BITS)
    )


def _q_val_cached(m: int, r: int) -> tuple[int, int]:
    """(nu2(Q), Q mod 2^_Q_CACHE_BITS) for the congruence quantity Q(m, r).

    nu2 is reported as -1 for Q == 0 (never matches a finite target).
    """
    key = (m, r)
    hit = _Q_CACHE.get(key)
    if hit is None:
        q = l_quantity(m, r)
        val = nu2(q) if q else -1
        hit = (val, q & ((1 << _Q_CACHE_BITS) - 1))
        _Q_CACHE[key] = hit
    return hit


def campaign_small(
    k_max: int = 200,
    n_max: int = 2529,
    shard: tuple[int, int] | None = None,
) -> CampaignReport:
    """Exhaustive equality scan L(k, n) == |disc(k)| for 2 <= k <= k_max.

    For each k the Lucas terms are walked from n = 0 upward and compared
    to the exact discriminant magnitude; the walk stops at the first
    term >= |disc| (terms are strictly increasing for n >= 2) or at
    n_max, whichever comes first.
    """
    if k_max < 2:
        raise ValueError("need k_max >= 2, got %d" % (k_max,))
    if n_max < 2:
        raise ValueError("need n_max >= 2, got %d" % (n_max,))
    piece, of = _shard_args(shard)
    t0 = time.perf_counter()

    terms_examined = 0
    hits: list[CandidatePair] = []
    for k in range(2, k_max + 1):
        if k % of != piece:
            continue
        delta = discriminant(k)
        params = SeqParams(k=k, family=LUCAS)
        for n, value in term_iter(params, 0):
            if n > n_max:
                break
            terms_examined += 1
            if value == delta:
                m, r = divmod(n, k + 1)
                hits.append(
                    CandidatePair(
                        k=k,
                        n=n,
                        r=r,
                        m=m,
                        a=None,
                        stage="equality_walk",
                        verdict="survivor",
                        stage_flags=frozenset({"exact_equality"}),
                    )
                )
            if n >= 2 and value >= delta:
                break

    hits.sort(key=lambda c: (c.k, c.n))
    ranges: dict = {"k_lo": 2, "k_hi": k_max, "n_lo": 0, "n_hi": n_max}
    if of > 1:
        ranges["shard"] = {"pieces": [piece], "of": of}
    return CampaignReport(
        campaign="small",
        ranges=ranges,
        stage_counts=[
            ("terms_examined", terms_examined),
            ("equality_hits", len(hits)),
        ],
        survivors=list(hits),
        candidates=hits,
        elapsed=time.perf_counter() - t0,
        notes=[
            "every Lucas term with 0 <= n <= n_hi is compared to |disc| exactly;"
            " the walk stops at the first term >= |disc| (monotone for n >= 2)",
        ],
    )


def campaign_case0(shard: tuple[int, int] | None = None) -> CampaignReport:
    """Rule out n divisible by k+1 for odd 5 <= k <= 201 by valuations.

    With r == 0 the Lucas term is congruent to +/-2 modulo 2^(k-2), so
    nu2(L(n)) == 1 whenever k >= 5, while |disc| of an odd k has
    nu2 == k - 1 >= 4.  The clash is verified numerically for each k;
    k in {2, 3} falls below the useful modulus and is covered
    exhaustively by the small campaign instead.
    """
    piece, of = _shard_args(shard)
    t0 = time.perf_counter()

    checked = 0
    gaps: list[CandidatePair] = []
    for idx, k in enumerate(range(5, 202, 2)):
        if idx % of != piece:
            continue
        checked += 1
        ok = True
        for m in (0, 1):
            residue, exponent = lucas_congruence(k, m, 0)
            # The residue pins nu2(L(n)) at 1 only if the modulus sees
            # past it, and the clash needs the discriminant valuation
            # k - 1 to differ from 1.
            if exponent < 2 or residue == 0 or nu2(residue) != 1 or k - 1 == 1:
                ok = False
        if not ok:
            gaps.append(
                CandidatePair(
                    k=k,
                    n=0,
                    r=0,
                    m=0,
                    a=None,
                    stage="valuation_clash",
                    verdict="survivor",
                    stage_flags=frozenset({"clash_not_established"}),
                )
            )

    gaps.sort(key=lambda c: (c.k, c.n))
    ranges: dict = {"k_lo": 5, "k_hi": 201, "k_parity": "odd", "residue": 0}
    if of > 1:
        ranges["shard"] = {"pieces": [piece], "of": of}
    return CampaignReport(
        campaign="case0",
        ranges=ranges,
        stage_counts=[
            ("odd_k_checked", checked),
            ("clashes_missing", len(gaps)),
        ],
        survivors=list(gaps),
        candidates=gaps,
        elapsed=time.perf_counter() - t0,
        notes=[
            "r == 0 forces L(n) == +/-2 modulo 2^(k-2), so nu2(L(n)) == 1 for k >= 5",
            "odd-k |disc| has nu2 == k - 1 >= 4, so equality is impossible",
            "k in {2, 3} sits below the useful modulus and is covered by the"
            " small campaign",
        ],
    )


def campaign_case12(
    k_lo: int = 202,
    k_hi: int = 70_000_000,
    test_modulus_bits: int = 100,
    appendix_compat: bool = False,
    shard: tuple[int, int] | None = None,
) -> CampaignReport:
    """Scan even k in [k_lo, k_hi) for window pairs with r in {1, 2}.

    Stage 1 walks every even k, proposes the few integers n near the
    admissible window (float arithmetic, widened by +/-1e-5), then
    confirms window membership in escalating extended precision and the
    residue r = n mod (k+1) exactly.  Stage 2 multiplies the Lucas
    congruence through by (k-1)^2: an equality L(n) == |disc| would force

        (k+1)^(k+1) == alpha2 := (-1)^m (k-1)^2 coeff(m, r)
                                             (mod 2^test_modulus_bits)

    up to sign, because (k-1)^2 |disc| = 2^(k+1) k^k - (k+1)^(k+1) and
    the leading term vanishes modulo 2^test_modulus_bits <= 2^(k+1).
    Both signs of alpha2 are accepted.

    ``appendix_compat`` switches the r == 2 coefficient from
    4m^2 + 6m + 3 to the variant 4m^2 + 6m + 1.
    """
    if k_lo % 2 or k_hi % 2:
        raise ValueError("k range not even-aligned: (%d, %d)" % (k_lo, k_hi))
    if k_lo <= 200:
        raise ValueError("need k_lo > 200, got %d" % (k_lo,))
    if test_modulus_bits < 1:
        raise ValueError("need test_modulus_bits >= 1, got %d" % (test_modulus_bits,))
    piece, of = _shard_args(shard)
    t0 = time.perf_counter()

    total = max(0, (k_hi - k_lo) // 2)
    scanned = 0
    float_proposals = 0
    proposals: list[tuple[int, int]] = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        if of > 1:
            idx = idx[idx % of == piece]
        if not idx.size:
            continue
        scanned += int(idx.size)
        kf = (k_lo + 2 * idx).astype(np.float64)
        # Exact for k < 2^53; absolute error of the window edge is far
        # below the 1e-5 slack for k < 1e8.
        window_lo = kf + (kf - 2.0) * np.log2(kf) - 0.1
        first = np.floor(window_lo) - 1.0
        kp1 = kf + 1.0
        for off in range(5):
            nf = first + off
            rf = nf - kp1 * np.floor(nf / kp1)
            keep = (
                (nf > window_lo - _FLOAT_SLACK)
                & (nf < window_lo + 2.4 + _FLOAT_SLACK)
                & ((rf == 1.0) | (rf == 2.0))
            )
            hit = np.nonzero(keep)[0]
            float_proposals += int(hit.size)
            for j in hit:
                proposals.append((int(kf[j]), int(nf[j])))
    proposals.sort()

    window_pairs: list[tuple[int, int, int, int]] = []
    for k, n in proposals:
        m, r = divmod(n, k + 1)
        if r not in (1, 2):
            continue
        if _window_member_exact(k, n):
            window_pairs.append((k, n, m, r))

    mod = 1 << test_modulus_bits
    mask = mod - 1
    candidates: list[CandidatePair] = []
    survivors: list[CandidatePair] = []
    for k, n, m, r in window_pairs:
        if r == 1:
            coeff = 4 * m + 1
        else:
            coeff = 4 * m * m + 6 * m + (1 if appendix_compat else 3)
        alpha2 = (k - 1) * (k - 1) * coeff
        if m & 1:
            alpha2 = -alpha2
        power = pow(k + 1, k + 1, mod)
        sign_plus = (power - alpha2) & mask == 0
        sign_minus = (power + alpha2) & mask == 0
        flags = {"window_member", "residue_%d" % r}
        if sign_plus:
            flags.add("sign_plus")
        if sign_minus:
            flags.add("sign_minus")
        survived = sign_plus or sign_minus
        if survived:
            flags.add("modulus_match")
        pair = CandidatePair(
            k=k,
            n=n,
            r=r,
            m=m,
            a=None,
            stage="window_residue",
            verdict="survivor" if survived else "eliminated",
            stage_flags=frozenset(flags),
        )
        candidates.append(pair)
        if survived:
            survivors.append(pair)

    ranges: dict = {
        "k_lo": k_lo,
        "k_hi": k_hi,
        "k_parity": "even",
        "residues": [1, 2],
        "test_modulus_bits": test_modulus_bits,
        "appendix_compat": appendix_compat,
    }
    if of > 1:
        ranges["shard"] = {"pieces": [piece], "of": of}
    return CampaignReport(
        campaign="case12",
        ranges=ranges,
        stage_counts=[
            ("k_scanned", scanned),
            ("window_residue_pairs", len(candidates)),
            ("modulus_survivors", len(survivors)),
        ],
        survivors=survivors,
        candidates=candidates,
        elapsed=time.perf_counter() - t0,
        notes=[
            "floats only propose candidate n near the admissible window;"
            " membership and residues are confirmed exactly",
            "stage 2 tests (k+1)^(k+1) == +/-(-1)^m (k-1)^2 coeff modulo"
            " 2^test_modulus_bits, accepting either sign",
        ],
        extras={"float_proposals": float_proposals},
    )


def campaign_case3(
    modulus_extra_bits: int = 150,
    shard: tuple[int, int] | None = None,
) -> CampaignReport:
    """Two-filter scan over (a, m, k) triples for r >= 3 and odd k.

    A solution with r >= 3 forces nu2(L(n)) == r - 2 + nu2(Q(m, r)) to
    equal the discriminant valuation k - 1, i.e. a := nu2(Q) == k - r + 1.
    The scan enumerates a - 1 in [0, 233], m in the widened admissible
    band, and odd k strictly inside the power-of-two localization window
    for m.  Filter 1 keeps triples with nu2(Q(m, r)) == a; filter 2
    compares odd parts:

        (-1)^m (k-1)^2 Q == 2^(a+2) (k^k - ((k+1)/2)^(k+1))
                                     (mod 2^min(a + extra, k))

    The clamp at 2^k keeps the modulus no stronger than the underlying
    congruence supports; it is inert for filter-1 survivors at the
    default parameters.
    """
    if modulus_extra_bits < 2:
        raise ValueError("need modulus_extra_bits >= 2, got %d" % (modulus_extra_bits,))
    piece, of = _shard_args(shard)
    t0 = time.perf_counter()

    m_lo, m_hi = m_range(K_CAP)
    triples = 0
    candidates: list[CandidatePair] = []
    survivors: list[CandidatePair] = []
    band_candidates = 0
    band_survivors = 0
    for a_minus1 in range(A_MINUS1_MAX + 1):
        if a_minus1 % of != piece:
            continue
        a = a_minus1 + 1
        for m in range(m_lo, m_hi + 1):
            lo, hi = localize_k_by_power2(m)
            k_start = lo + 1 + (lo & 1)  # smallest odd integer > lo
            for k in range(k_start, hi, 2):
                r = k - a_minus1
                if r < 3:
                    continue
                triples += 1
                q_nu, q_low = _q_val_cached(m, r)
                if q_nu != a:
                    continue
                exponent = min(a + modulus_extra_bits, k)
                mod = 1 << exponent
                mask = mod - 1
                if exponent <= _Q_CACHE_BITS:
                    q_mod = q_low & mask
                else:
                    q_mod = l_quantity(m, r) & mask
                lhs = (k - 1) * (k - 1) % mod * q_mod % mod
                if m & 1:
                    lhs = -lhs & mask
                rhs = pow(k, k, mod) - pow((k + 1) >> 1, k + 1, mod)
                rhs = (rhs << (a + 2)) & mask
                survived = lhs == rhs
                in_band = 9 <= m <= 55
                flags = {"valuation_match"}
                if in_band:
                    flags.add("m_band_9_55")
                if survived:
                    flags.add("congruence_match")
                pair = CandidatePair(
                    k=k,
                    n=m * (k + 1) + r,
                    r=r,
                    m=m,
                    a=a,
                    stage="valuation",
                    verdict="survivor" if survived else "eliminated",
                    stage_flags=frozenset(flags),
                )
                candidates.append(pair)
                band_candidates += in_band
                if survived:
                    survivors.append(pair)
                    band_survivors += in_band

    candidates.sort(key=lambda c: (c.k, c.n))
    survivors.sort(key=lambda c: (c.k, c.n))
    ranges: dict = {
        "k_floor": 200,
        "k_cap": K_CAP,
        "k_parity": "odd",
        "m_lo": m_lo,
        "m_hi": m_hi,
        "a_lo": 1,
        "a_hi": A_MINUS1_MAX + 1,
        "r_lo": 3,
        "modulus_extra_bits": modulus_extra_bits,
    }
    if of > 1:
        ranges["shard"] = {"pieces": [piece], "of": of}
    return CampaignReport(
        campaign="case3",
        ranges=ranges,
        stage_counts=[
            ("triples_enumerated", triples),
            ("valuation_matches", len(candidates)),
            ("congruence_survivors", len(survivors)),
        ],
        survivors=survivors,
        candidates=candidates,
        elapsed=time.perf_counter() - t0,
        notes=[
            "filter 1 keeps triples whose congruence quantity has nu2 equal to"
            " a = k - r + 1, matching the discriminant valuation k - 1",
            "filter 2 compares odd parts modulo 2^min(a + extra, k)",
            "the m scan is one band wider on each side than the tight envelope;"
            " tallies on the tight band 9..55 are reported in extras",
        ],
        extras={
            "valuation_matches_m_9_55": band_candidates,
            "survivors_m_9_55": band_survivors,
        },
    )


_CAMPAIGNS = {
    "small": campaign_small,
    "case0": campaign_case0,
    "case12": campaign_case12,
    "case3": campaign_case3,
}


def shard(campaign: str, piece: int, of: int, **params) -> CampaignReport:
    """Run one shard (piece-th residue class out of ``of``) of a campaign.

    Shards of a campaign partition its work: running every piece in
    [0, of) and merging the reports reproduces the unsharded report
    byte-for-byte (timing excluded).
    """
    if campaign not in _CAMPAIGNS:
        raise ValueError("unknown campaign %r; expected one of %s" % (campaign, CAMPAIGN_NAMES))
    if of < 1 or not 0 <= piece < of:
        raise ValueError("bad shard (%r, %r): need 0 <= piece < of" % (piece, of))
    return _CAMPAIGNS[campaign](shard=(piece, of), **params)


def merge_reports(reports: list[CampaignReport]) -> CampaignReport:
    """Merge shard reports of one campaign into a combined report.

    All inputs must come from the same campaign with identical
    parameters and the same shard denominator; their pieces must be
    disjoint.  Once every piece is present the shard bookkeeping is
    dropped, making the merge byte-identical to an unsharded run
    (timing aside; elapsed is summed).
    """
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    first = reports[0]
    base = {key: val for key, val in first.ranges.items() if key != "shard"}
    names = [name for name, _ in first.stage_counts]
    counts = [0] * len(names)
    pieces: list[int] = []
    of = None
    survivors: list[CandidatePair] = []
    candidates: list[CandidatePair] = []
    extras: dict = {}
    elapsed = 0.0
    for rep in reports:
        if rep.campaign != first.campaign:
            raise ValueError("campaign mismatch: %r vs %r" % (rep.campaign, first.campaign))
        if {k: v for k, v in rep.ranges.items() if k != "shard"} != base:
            raise ValueError("parameter mismatch between shards")
        if [name for name, _ in rep.stage_counts] != names:
            raise ValueError("stage mismatch between shards")
        if rep.notes != first.notes:
            raise ValueError("notes mismatch between shards")
        info = rep.ranges.get("shard")
        if info is None:
            if len(reports) > 1:
                raise ValueError("cannot merge an unsharded report with others")
            rep_pieces, rep_of = [0], 1
        else:
            rep_pieces, rep_of = info["pieces"], info["of"]
        if of is None:
            of = rep_of
        elif of != rep_of:
            raise ValueError("shard denominators differ: %d vs %d" % (of, rep_of))
        overlap = set(pieces) & set(rep_pieces)
        if overlap:
            raise ValueError("overlapping shard pieces: %s" % sorted(overlap))
        pieces.extend(rep_pieces)
        for i, (_, count) in enumerate(rep.stage_counts):
            counts[i] += count
        survivors.extend(rep.survivors)
        candidates.extend(rep.candidates)
        for key, val in rep.extras.items():
            extras[key] = extras.get(key, 0) + val
        elapsed += rep.elapsed

    survivors.sort(key=lambda c: (c.k, c.n))
    candidates.sort(key=lambda c: (c.k, c.n))
    ranges = dict(base)
    assert of is not None
    if sorted(pieces) != list(range(of)):
        ranges["shard"] = {"pieces": sorted(pieces), "of": of}
    return CampaignReport(
        campaign=first.campaign,
        ranges=ranges,
        stage_counts=list(zip(names, counts)),
        survivors=survivors,
        candidates=candidates,
        elapsed=elapsed,
        notes=list(first.notes),
        extras=extras,
    )


def _candidate_row(campaign: str, cand: CandidatePair) -> dict:
    row = {
        "campaign": campaign,
        "stage": cand.stage,
        "k": cand.k,
        "n": cand.n,
        "r": cand.r,
        "m": cand.m,
        "verdict": cand.verdict,
    }
    if cand.a is not None:
        row["a"] = cand.a
    if cand.stage_flags:
        row["flags"] = sorted(cand.stage_flags)
    return row


def report_to_jsonl(report: CampaignReport, include_timing: bool = True) -> str:
    """Serialize a report as JSON lines: one row per candidate, then a summary.

    Keys are sorted and separators fixed, so identical reports serialize
    to identical bytes; pass ``include_timing=False`` to drop the only
    nondeterministic field.
    """
    lines = [
        json.dumps(_candidate_row(report.campaign, cand), sort_keys=True, separators=(",", ":"))
        for cand in report.candidates
    ]
    summary: dict = {
        "campaign": report.campaign,
        "stage": "summary",
        "ranges": report.ranges,
        "stage_counts": [[name, count] for name, count in report.stage_counts],
        "survivors": [[cand.k, cand.n] for cand in report.survivors],
    }
    if report.extras:
        summary["extras"] = report.extras
    if report.notes:
        summary["notes"] = report.notes
    if include_timing:
        summary["elapsed"] = round(report.elapsed, 6)
    lines.append(json.dumps(summary, sort_keys=True, separators=(",", ":")))
    return "\n".join(lines) + "\n"
