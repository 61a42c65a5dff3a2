"""CLI behavior: exit codes, output formats, worker determinism."""

import json

import pytest

from lucasdisc.cli import run


def test_term_example(capsys):
    assert run(["term", "--family", "lucas", "--k", "5", "--n", "9"]) == 0
    assert capsys.readouterr().out.strip() == "352"


def test_term_fibonacci(capsys):
    assert run(["term", "--family", "fibonacci", "--k", "2", "--n", "10"]) == 0
    assert capsys.readouterr().out.strip() == "55"


def test_disc_example(capsys):
    assert run(["disc", "--k", "3"]) == 0
    assert capsys.readouterr().out.splitlines() == ["44", "nu2 = 2"]


def test_nu2(capsys):
    assert run(["nu2", "--x", "352"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert run(["nu2", "--x", "0"]) == 0
    assert capsys.readouterr().out.strip() == "inf"


def test_root(capsys):
    assert run(["root", "--k", "5"]) == 0
    out = capsys.readouterr().out
    assert "width <= 2^-128" in out
    assert "1.96594823664548" in out


def test_usage_errors():
    assert run([]) == 2
    assert run(["term", "--k", "5"]) == 2
    assert run(["term", "--k", "1", "--n", "3"]) == 2
    assert run(["search", "bogus"]) == 2
    assert run(["search", "small", "--appendix-compat"]) == 2
    assert run(["search", "small", "--modulus-bits", "5"]) == 2
    assert run(["search", "case12", "--modulus-extra-bits", "5"]) == 2
    assert run(
        ["search", "case3", "--modulus-bits", "100", "--modulus-extra-bits", "100"]
    ) == 2
    assert run(["search", "case12", "--shard", "0/2", "--workers", "2"]) == 2
    assert run(["search", "case12", "--shard", "5"]) == 2
    assert run(["search", "case12", "--k-lo", "201", "--k-hi", "300"]) == 2


def test_verify_lemmas_subset(capsys):
    assert run(["verify-lemmas", "--suite", "recurrence", "--suite", "congruence_table"]) == 0
    out = capsys.readouterr().out
    assert "PASS recurrence" in out
    assert "PASS congruence_table" in out


def test_bounds(capsys):
    assert run(["bounds", "--k", "1024"]) == 0
    out = capsys.readouterr().out
    assert "65854579697213341" in out
    assert "58711" in out
    assert "65964094" in out
    assert "8 .. 57" in out
    assert "11243.9" in out


def test_search_small_exit_zero(capsys):
    assert run(["search", "small", "--k-max", "30", "--workers", "1", "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "survivors: none" in out


def test_search_case12_jsonl_to_file(tmp_path):
    target = tmp_path / "report.jsonl"
    code = run(
        [
            "search",
            "case12",
            "--k-lo",
            "202",
            "--k-hi",
            "10000",
            "--workers",
            "1",
            "--format",
            "jsonl",
            "--no-timing",
            "--output",
            str(target),
        ]
    )
    assert code == 0
    lines = target.read_text().strip().split("\n")
    summary = json.loads(lines[-1])
    assert summary["stage_counts"][1] == ["window_residue_pairs", 10]
    assert summary["survivors"] == []


def test_search_worker_count_does_not_change_bytes(capsys):
    base = ["search", "case12", "--k-lo", "202", "--k-hi", "10000", "--format", "jsonl", "--no-timing"]
    assert run(base + ["--workers", "1"]) == 0
    one = capsys.readouterr().out
    assert run(base + ["--workers", "3"]) == 0
    three = capsys.readouterr().out
    assert one == three


def test_workers_env_override(monkeypatch, capsys):
    monkeypatch.setenv("LUCASDISC_WORKERS", "2")
    assert run(["search", "case0", "--format", "jsonl", "--no-timing"]) == 0
    summary = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert summary["stage_counts"] == [["odd_k_checked", 99], ["clashes_missing", 0]]
    monkeypatch.setenv("LUCASDISC_WORKERS", "zero")
    assert run(["search", "case0"]) == 2


def test_search_shard_flag(capsys):
    assert run(
        [
            "search",
            "case12",
            "--k-lo",
            "202",
            "--k-hi",
            "10000",
            "--shard",
            "1/3",
            "--format",
            "jsonl",
            "--no-timing",
        ]
    ) == 0
    summary = json.loads(capsys.readouterr().out.strip().split("\n")[-1])
    assert summary["ranges"]["shard"] == {"of": 3, "pieces": [1]}


def test_search_csv_format(capsys):
    assert run(
        ["search", "case12", "--k-lo", "202", "--k-hi", "10000", "--workers", "1", "--format", "csv"]
    ) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "campaign,stage,k,n,r,m,a,verdict"
    assert len(lines) == 11
    assert lines[1].startswith("case12,window_residue,274,2477,2,9,,")


def test_human_format_caps_candidate_listing(capsys):
    assert run(["search", "case3", "--workers", "1", "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "more (use jsonl or csv for the full list)" in out
    assert "survivors: none" in out


def test_search_survivors_exit_one(capsys):
    # degenerate 1-bit modulus: every stage-1 pair trivially survives
    code = run(
        [
            "search",
            "case12",
            "--k-lo",
            "202",
            "--k-hi",
            "10000",
            "--workers",
            "1",
            "--modulus-bits",
            "1",
            "--no-timing",
        ]
    )
    assert code == 1
    assert "survivors: 10" in capsys.readouterr().out
