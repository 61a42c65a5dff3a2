"""Campaign behavior: frozen counts, shard determinism, filter monotonicity."""

import json

import pytest

from lucasdisc.bounds import discriminant
from lucasdisc.campaigns import (
    CandidatePair,
    campaign_case0,
    campaign_case12,
    campaign_case3,
    campaign_small,
    merge_reports,
    report_to_jsonl,
    shard,
)
from lucasdisc.sequences import LUCAS, SeqParams, term_iter

# Counts frozen after the first verified full runs.
SMALL_TERMS = 157411
CASE12_TOY_PAIRS = 10
CASE12_FULL_PAIRS = 32
CASE3_TRIPLES = 3340584
CASE3_VALUATION_MATCHES = 12219
CASE3_SURVIVORS_AT_100 = 14


def test_small_campaign_frozen_counts(small_report):
    assert small_report.stage_counts == [
        ("terms_examined", SMALL_TERMS),
        ("equality_hits", 0),
    ]
    assert small_report.survivors == []
    assert small_report.ranges["k_hi"] == 200
    assert small_report.ranges["n_hi"] == 2529


def test_small_campaign_cross_checks_brute_force():
    report = campaign_small(k_max=16, n_max=300)
    brute = []
    for k in range(2, 17):
        delta = discriminant(k)
        for n, value in term_iter(SeqParams(k=k, family=LUCAS), 0):
            if n > 300:
                break
            if value == delta:
                brute.append((k, n))
            if n >= 2 and value >= delta:
                break
    assert [(c.k, c.n) for c in report.survivors] == brute == []


def test_case0_all_odd_k_clash():
    report = campaign_case0()
    assert report.stage_counts == [("odd_k_checked", 99), ("clashes_missing", 0)]
    assert report.survivors == []


def test_case12_toy_frozen_pairs(case12_toy_report):
    report = case12_toy_report
    assert report.stage_counts == [
        ("k_scanned", 4899),
        ("window_residue_pairs", CASE12_TOY_PAIRS),
        ("modulus_survivors", 0),
    ]
    assert [(c.k, c.n) for c in report.candidates] == [
        (274, 2477),
        (532, 5332),
        (1046, 11518),
        (1046, 11519),
        (2072, 24877),
        (2072, 24878),
        (4122, 53600),
        (4122, 53601),
        (8220, 115095),
        (8220, 115096),
    ]
    for c in report.candidates:
        assert c.k % 2 == 0
        assert c.r in (1, 2)
        assert c.n % (c.k + 1) == c.r
        assert c.m == c.n // (c.k + 1)


def test_case12_degenerate_modulus_all_survive():
    report = campaign_case12(202, 10_000, test_modulus_bits=1)
    assert report.stage_counts[1][1] == CASE12_TOY_PAIRS
    assert report.stage_counts[2][1] == CASE12_TOY_PAIRS


def test_case12_appendix_compat_variant_runs():
    report = campaign_case12(202, 10_000, appendix_compat=True)
    # stage 1 is unaffected by the coefficient variant
    assert report.stage_counts[1][1] == CASE12_TOY_PAIRS
    assert report.ranges["appendix_compat"] is True


def test_case12_validation():
    with pytest.raises(ValueError):
        campaign_case12(201, 10_000)
    with pytest.raises(ValueError):
        campaign_case12(202, 9_999)
    with pytest.raises(ValueError):
        campaign_case12(200, 10_000)
    with pytest.raises(ValueError):
        campaign_case12(202, 10_000, test_modulus_bits=0)


def test_case12_empty_range():
    report = campaign_case12(202, 202)
    assert report.stage_counts == [
        ("k_scanned", 0),
        ("window_residue_pairs", 0),
        ("modulus_survivors", 0),
    ]


def test_case3_validation():
    with pytest.raises(ValueError):
        campaign_case3(modulus_extra_bits=1)


def test_case3_full_run_at_150(case3_150_report):
    report = case3_150_report
    assert report.stage_counts == [
        ("triples_enumerated", CASE3_TRIPLES),
        ("valuation_matches", CASE3_VALUATION_MATCHES),
        ("congruence_survivors", 0),
    ]
    assert report.extras["survivors_m_9_55"] == 0
    for c in report.candidates:
        assert c.k % 2 == 1
        assert c.r >= 3
        assert c.a == c.k - c.r + 1
        assert c.n == c.m * (c.k + 1) + c.r


def test_case3_survivor_monotonicity(case3_150_report, case3_100_report):
    strict = {(c.k, c.n) for c in case3_150_report.survivors}
    loose = {(c.k, c.n) for c in case3_100_report.survivors}
    assert strict <= loose
    assert len(loose) == CASE3_SURVIVORS_AT_100
    # identical enumeration regardless of the modulus margin
    assert case3_100_report.stage_counts[0] == case3_150_report.stage_counts[0]
    assert case3_100_report.stage_counts[1] == case3_150_report.stage_counts[1]


def test_case3_survivors_sit_next_to_powers_of_two(case3_100_report):
    for c in case3_100_report.survivors:
        assert c.k == 2 ** (c.k.bit_length() - 1) + 1
        assert 9 <= c.m <= 55


@pytest.mark.parametrize("pieces", [2, 5])
def test_case12_shard_merge_is_byte_identical(pieces, case12_toy_report):
    parts = [shard("case12", p, pieces, k_lo=202, k_hi=10_000) for p in range(pieces)]
    merged = merge_reports(parts)
    assert report_to_jsonl(merged, include_timing=False) == report_to_jsonl(
        case12_toy_report, include_timing=False
    )


def test_small_shard_merge_is_byte_identical(small_report):
    parts = [shard("small", p, 3) for p in range(3)]
    merged = merge_reports(parts)
    assert report_to_jsonl(merged, include_timing=False) == report_to_jsonl(
        small_report, include_timing=False
    )


def test_case3_shard_merge_is_byte_identical(case3_150_report):
    parts = [shard("case3", p, 4, modulus_extra_bits=150) for p in range(4)]
    merged = merge_reports(parts)
    assert report_to_jsonl(merged, include_timing=False) == report_to_jsonl(
        case3_150_report, include_timing=False
    )


def test_partial_merge_keeps_shard_bookkeeping():
    parts = [shard("case0", p, 4) for p in (0, 2)]
    merged = merge_reports(parts)
    assert merged.ranges["shard"] == {"pieces": [0, 2], "of": 4}
    full = merge_reports([merged, shard("case0", 1, 4), shard("case0", 3, 4)])
    assert "shard" not in full.ranges
    assert full.stage_counts == campaign_case0().stage_counts


def test_merge_rejects_mismatches():
    with pytest.raises(ValueError):
        merge_reports([])
    with pytest.raises(ValueError):
        merge_reports([shard("case0", 0, 2), shard("small", 1, 2)])
    with pytest.raises(ValueError):
        merge_reports([shard("case0", 0, 2), shard("case0", 0, 2)])
    with pytest.raises(ValueError):
        merge_reports([shard("case0", 0, 2), shard("case0", 1, 3)])
    with pytest.raises(ValueError):
        merge_reports(
            [shard("small", 0, 2, k_max=50), shard("small", 1, 2, k_max=60)]
        )
    with pytest.raises(ValueError):
        shard("nonsense", 0, 1)
    with pytest.raises(ValueError):
        shard("small", 3, 2)


def test_jsonl_schema(case12_toy_report):
    text = report_to_jsonl(case12_toy_report)
    lines = text.strip().split("\n")
    assert len(lines) == CASE12_TOY_PAIRS + 1
    for line in lines[:-1]:
        row = json.loads(line)
        assert row["campaign"] == "case12"
        assert {"stage", "k", "n", "r", "m", "verdict"} <= set(row)
    summary = json.loads(lines[-1])
    assert summary["stage"] == "summary"
    assert summary["stage_counts"][1] == ["window_residue_pairs", CASE12_TOY_PAIRS]
    assert "elapsed" in summary
    bare = json.loads(report_to_jsonl(case12_toy_report, include_timing=False).strip().split("\n")[-1])
    assert "elapsed" not in bare


def test_stage_counts_non_increasing(small_report, case12_toy_report, case3_150_report):
    for report in (small_report, case12_toy_report, case3_150_report, campaign_case0()):
        counts = [count for _, count in report.stage_counts]
        assert counts == sorted(counts, reverse=True)
        assert {(c.k, c.n) for c in report.survivors} <= {
            (c.k, c.n) for c in report.candidates
        }


def test_candidate_pair_is_frozen():
    pair = CandidatePair(k=2, n=1, r=1, m=0, a=None, stage="x", verdict="eliminated")
    with pytest.raises(AttributeError):
        pair.k = 3
