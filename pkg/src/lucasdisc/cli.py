"""Command-line interface for the Lucas/discriminant toolkit.

Subcommands::

    term           one k-generalized Fibonacci or Lucas term
    disc           |disc| of x^k - x^(k-1) - ... - 1 and its 2-adic valuation
    nu2            2-adic valuation of an integer
    root           certified enclosure of the dominant root
    verify-lemmas  run the named invariant suites
    search         run one search campaign (small, case0, case12, case3)
    bounds         derived exclusion bounds and scan envelopes

Exit codes: 0 on success (and zero survivors for ``search``), 1 when a
search reports survivors or an invariant suite fails, 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import multiprocessing
import os
import sys

import mpmath

from .sequences import FIBONACCI, LUCAS, SeqParams, term
from .twoadic import nu2, disc_nu2
from .roots import dominant_root
from .bounds import (
    bl_crossover_k,
    bound_profile,
    discriminant,
    m_range,
    n_window,
    solve_bl_k_bound,
    solve_matveev_k_bound,
)
from .campaigns import (
    CampaignReport,
    campaign_case0,
    campaign_case12,
    campaign_case3,
    campaign_small,
    merge_reports,
    report_to_jsonl,
    shard,
)
from .lemmas import SUITES, run_suite

__all__ = ["build_parser", "run", "main", "report_to_csv"]

_DISPATCH = {
    "small": campaign_small,
    "case0": campaign_case0,
    "case12": campaign_case12,
    "case3": campaign_case3,
}

# Candidate rows shown by the human format before truncating (full
# listings are always available via jsonl/csv).
_HUMAN_CANDIDATE_CAP = 50


def _default_workers() -> int:
    env = os.environ.get("LUCASDISC_WORKERS")
    if env:
        try:
            count = int(env)
        except ValueError:
            raise ValueError("LUCASDISC_WORKERS must be an integer, got %r" % (env,))
        if count < 1:
            raise ValueError("LUCASDISC_WORKERS must be >= 1, got %d" % (count,))
        return count
    return os.cpu_count() or 1


def _parse_shard(text: str) -> tuple[int, int]:
    piece_s, sep, of_s = text.partition("/")
    try:
        piece, of = int(piece_s), int(of_s)
    except ValueError:
        raise argparse.ArgumentTypeError("shard must look like i/N, got %r" % (text,))
    if not sep or of < 1 or not 0 <= piece < of:
        raise argparse.ArgumentTypeError("shard must satisfy 0 <= i < N, got %r" % (text,))
    return piece, of


def report_to_csv(report: CampaignReport) -> str:
    """Candidate rows as CSV: scalar columns only, no nested fields."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["campaign", "stage", "k", "n", "r", "m", "a", "verdict"])
    for c in report.candidates:
        writer.writerow(
            [report.campaign, c.stage, c.k, c.n, c.r, c.m, "" if c.a is None else c.a, c.verdict]
        )
    return buf.getvalue()


def _report_to_human(report: CampaignReport, include_timing: bool) -> str:
    lines = ["campaign: %s" % report.campaign]
    lines.append(
        "ranges: " + " ".join("%s=%s" % (key, val) for key, val in sorted(report.ranges.items()))
    )
    lines.append("stage counts:")
    for name, count in report.stage_counts:
        lines.append("  %-28s %d" % (name, count))
    lines.append("candidates: %d" % len(report.candidates))
    for c in report.candidates[:_HUMAN_CANDIDATE_CAP]:
        extra = "" if c.a is None else " a=%d" % c.a
        lines.append("  k=%d n=%d r=%d m=%d%s %s" % (c.k, c.n, c.r, c.m, extra, c.verdict))
    hidden = len(report.candidates) - _HUMAN_CANDIDATE_CAP
    if hidden > 0:
        lines.append("  ... %d more (use jsonl or csv for the full list)" % hidden)
    if report.survivors:
        lines.append("survivors: %d" % len(report.survivors))
        for c in report.survivors:
            lines.append("  k=%d n=%d" % (c.k, c.n))
    else:
        lines.append("survivors: none")
    for key, val in sorted(report.extras.items()):
        lines.append("%s: %s" % (key, val))
    if include_timing:
        lines.append("elapsed: %.3fs" % report.elapsed)
    return "\n".join(lines) + "\n"


def _shard_call(campaign: str, piece: int, of: int, params: dict) -> CampaignReport:
    return shard(campaign, piece, of, **params)


def _cmd_term(args: argparse.Namespace) -> int:
    params = SeqParams(k=args.k, family=args.family)
    print(term(params, args.n))
    return 0


def _cmd_disc(args: argparse.Namespace) -> int:
    print(discriminant(args.k))
    print("nu2 = %d" % disc_nu2(args.k))
    return 0


def _cmd_nu2(args: argparse.Namespace) -> int:
    value = nu2(args.x)
    print("inf" if value == float("inf") else value)
    return 0


def _cmd_root(args: argparse.Namespace) -> int:
    enc = dominant_root(args.k, args.precision_bits)
    digits = max(20, args.precision_bits * 30 // 100)
    with mpmath.workprec(args.precision_bits + 32):
        lo = mpmath.mpf(enc.lo.numerator) / enc.lo.denominator
        hi = mpmath.mpf(enc.hi.numerator) / enc.hi.denominator
        print("k = %d" % args.k)
        print("lo = %s" % mpmath.nstr(lo, digits, strip_zeros=False))
        print("hi = %s" % mpmath.nstr(hi, digits, strip_zeros=False))
    print("width <= 2^-%d" % enc.precision_bits)
    return 0


def _cmd_verify_lemmas(args: argparse.Namespace) -> int:
    names = args.suite or list(SUITES)
    failed = 0
    for name in names:
        failures = run_suite(name, args.scale)
        if failures:
            failed += 1
            print("FAIL %s (%d failures)" % (name, len(failures)))
            for f in failures[:10]:
                print("     %s %s" % (f.detail, f.params))
        else:
            print("PASS %s" % name)
    return 1 if failed else 0


def _campaign_params(args: argparse.Namespace, parser: argparse.ArgumentParser) -> dict:
    campaign = args.campaign
    params: dict = {}

    def only_for(flag: str, value, campaigns: tuple[str, ...], name: str):
        if value is None or value is False:
            return
        if campaign not in campaigns:
            parser.error("--%s only applies to %s" % (flag, "/".join(campaigns)))
        params[name] = value

    only_for("k-max", args.k_max, ("small",), "k_max")
    only_for("n-max", args.n_max, ("small",), "n_max")
    only_for("k-lo", args.k_lo, ("case12",), "k_lo")
    only_for("k-hi", args.k_hi, ("case12",), "k_hi")
    only_for("appendix-compat", args.appendix_compat, ("case12",), "appendix_compat")
    only_for("modulus-extra-bits", args.modulus_extra_bits, ("case3",), "modulus_extra_bits")
    if args.modulus_bits is not None:
        if campaign == "case12":
            params["test_modulus_bits"] = args.modulus_bits
        elif campaign == "case3":
            if "modulus_extra_bits" in params:
                parser.error("give only one of --modulus-bits / --modulus-extra-bits")
            params["modulus_extra_bits"] = args.modulus_bits
        else:
            parser.error("--modulus-bits only applies to case12/case3")
    return params


def _cmd_search(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    params = _campaign_params(args, parser)
    if args.shard is not None:
        if args.workers is not None:
            parser.error("--shard and --workers are mutually exclusive")
        piece, of = args.shard
        report = shard(args.campaign, piece, of, **params)
    else:
        workers = args.workers if args.workers is not None else _default_workers()
        if workers < 1:
            parser.error("--workers must be >= 1")
        if workers == 1:
            report = _DISPATCH[args.campaign](**params)
        else:
            jobs = [(args.campaign, piece, workers, params) for piece in range(workers)]
            with multiprocessing.Pool(workers) as pool:
                reports = pool.starmap(_shard_call, jobs)
            report = merge_reports(reports)

    include_timing = not args.no_timing
    if args.format == "jsonl":
        text = report_to_jsonl(report, include_timing=include_timing)
    elif args.format == "csv":
        text = report_to_csv(report)
    else:
        text = _report_to_human(report, include_timing)

    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report.survivors else 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    caps = solve_matveev_k_bound()
    print("linear-forms k cap: %d" % caps.k_max)
    print("linear-forms n cap: %d" % caps.n_max)
    print("2-adic bound crossover k: %d" % bl_crossover_k())
    print("2-adic k cap (r in {1,2}): %d" % solve_bl_k_bound())
    m_lo, m_hi = m_range()
    print("m envelope up to the k cap: %d .. %d" % (m_lo, m_hi))
    if args.k is not None:
        profile = bound_profile(args.k)
        lo, hi = n_window(args.k)
        print("k = %d:" % args.k)
        print("  n window: (%.4f, %.4f)" % (lo, hi))
        print("  m range: %d .. %d" % (profile.m_lo, profile.m_hi))
        print("  max nu2 of the congruence quantity: %d" % profile.a_max)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucasdisc",
        description="search and verification toolkit for k-generalized Lucas"
        " numbers vs. trinomial-like discriminants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_term = sub.add_parser("term", help="print one sequence term")
    p_term.add_argument("--family", choices=[FIBONACCI, LUCAS], default=LUCAS)
    p_term.add_argument("--k", type=int, required=True, help="recurrence order (>= 2)")
    p_term.add_argument("--n", type=int, required=True, help="index")

    p_disc = sub.add_parser("disc", help="print |disc| and its 2-adic valuation")
    p_disc.add_argument("--k", type=int, required=True)

    p_nu2 = sub.add_parser("nu2", help="print the 2-adic valuation of an integer")
    p_nu2.add_argument("--x", type=int, required=True)

    p_root = sub.add_parser("root", help="print a certified dominant-root enclosure")
    p_root.add_argument("--k", type=int, required=True)
    p_root.add_argument("--precision-bits", type=int, default=128)

    p_ver = sub.add_parser("verify-lemmas", help="run the named invariant suites")
    p_ver.add_argument("--scale", type=int, default=1, help="grid size multiplier")
    p_ver.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only this suite (repeatable)")

    p_search = sub.add_parser("search", help="run one search campaign")
    p_search.add_argument("campaign", choices=sorted(_DISPATCH))
    p_search.add_argument("--k-max", type=int, help="small: largest k (default 200)")
    p_search.add_argument("--n-max", type=int, help="small: largest n (default 2529)")
    p_search.add_argument("--k-lo", type=int, help="case12: first even k (default 202)")
    p_search.add_argument("--k-hi", type=int, help="case12: exclusive even end (default 7e7)")
    p_search.add_argument(
        "--modulus-bits",
        type=int,
        help="case12: power-of-two test modulus bits (default 100);"
        " case3: extra bits above the matched valuation (default 150)",
    )
    p_search.add_argument(
        "--modulus-extra-bits",
        type=int,
        help="case3 alias for --modulus-bits",
    )
    p_search.add_argument(
        "--appendix-compat",
        action="store_true",
        help="case12: use the 4m^2+6m+1 variant of the r=2 coefficient",
    )
    p_search.add_argument("--shard", type=_parse_shard, metavar="i/N", help="run only shard i of N")
    p_search.add_argument(
        "--workers",
        type=int,
        help="parallel shards to run and merge (default: LUCASDISC_WORKERS or cpu count)",
    )
    p_search.add_argument("--format", choices=["jsonl", "csv", "human"], default="human")
    p_search.add_argument("--output", help="write the report here instead of stdout")
    p_search.add_argument("--no-timing", action="store_true", help="omit elapsed time (stable bytes)")

    p_bounds = sub.add_parser("bounds", help="print derived exclusion bounds")
    p_bounds.add_argument("--k", type=int, help="also print the per-k scan envelope (k > 200)")

    parser.set_defaults(parser=parser)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        if args.command == "term":
            return _cmd_term(args)
        if args.command == "disc":
            return _cmd_disc(args)
        if args.command == "nu2":
            return _cmd_nu2(args)
        if args.command == "root":
            return _cmd_root(args)
        if args.command == "verify-lemmas":
            return _cmd_verify_lemmas(args)
        if args.command == "search":
            return _cmd_search(args, parser)
        if args.command == "bounds":
            return _cmd_bounds(args)
    except SystemExit as exc:  # parser.error inside subcommand handling
        code = exc.code
        return code if isinstance(code, int) else 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    raise AssertionError("unreachable command %r" % (args.command,))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
